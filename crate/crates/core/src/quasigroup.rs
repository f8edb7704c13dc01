//! Cordiality over Cayley tables.
//!
//! Vertex labels are drawn from a subset `S` of a quasigroup `Q` and must be
//! balanced over `S`; arc `t -> h` gets `op(f(t), f(h))` and the arc labels
//! must be balanced over all of `Q`. The (2,3) setting is the instance
//! `S = {0, 1}` in `Z3` with `op(x, y) = y - x`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};

/// A `q x q` operation table on `0..q`. Entries are in range; the Latin
/// property is checked separately by [`validate_latin`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<usize>,
    names: Option<Vec<String>>,
}

impl CayleyTable {
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != order {
                return Err(Error::RaggedTable {
                    row,
                    len: r.len(),
                    order,
                });
            }
            for &entry in r {
                if entry >= order {
                    return Err(Error::EntryOutOfRange { entry, order });
                }
            }
            entries.extend_from_slice(r);
        }
        Ok(Self {
            order,
            entries,
            names: None,
        })
    }

    /// The table of `f` on `0..order`.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|i| (0..order).map(|j| f(i, j)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Addition mod `q`.
    pub fn cyclic(q: usize) -> Self {
        Self::from_fn(q, |i, j| (i + j) % q).expect("entries reduced mod q")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.order {
            return Err(Error::LengthMismatch {
                expected: self.order,
                found: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.order + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries
            .chunks(self.order.max(1))
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// Display name of an element, falling back to its index.
    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Swaps two entries of one row, for corruption checks.
    pub fn swap_in_row(&mut self, row: usize, a: usize, b: usize) {
        self.entries
            .swap(row * self.order + a, row * self.order + b);
    }

    /// Reads `q` then `q` rows of `q` integers; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing order line".into(),
        })?;
        let q: usize = header.parse().map_err(|_| Error::Parse {
            line,
            message: format!("bad order `{header}`"),
        })?;
        let mut rows = Vec::with_capacity(q);
        for (line, text) in lines {
            let row = text
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::Parse {
                        line,
                        message: format!("bad entry `{t}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.len() != q {
            return Err(Error::Parse {
                line: 0,
                message: format!("expected {q} rows, found {}", rows.len()),
            });
        }
        Self::from_rows(&rows)
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Every row and every column is a permutation of `0..q`.
pub fn validate_latin(t: &CayleyTable) -> bool {
    let q = t.order();
    let mut seen = vec![false; q];
    let mut is_perm = |cell: &dyn Fn(usize) -> usize| {
        seen.iter_mut().for_each(|s| *s = false);
        (0..q).all(|k| !std::mem::replace(&mut seen[cell(k)], true))
    };
    (0..q).all(|i| is_perm(&|j| t.op(i, j)) && is_perm(&|j| t.op(j, i)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CordialInstance {
    table: CayleyTable,
    label_subset: Vec<usize>,
}

impl CordialInstance {
    /// Arc `t -> h` is labeled `table.op(f(t), f(h))`.
    pub fn new(table: CayleyTable, label_subset: &[usize]) -> Result<Self> {
        let mut subset = label_subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&element) = subset.iter().find(|&&s| s >= table.order()) {
            return Err(Error::SubsetOutOfRange {
                element,
                order: table.order(),
            });
        }
        Ok(Self {
            table,
            label_subset: subset,
        })
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    pub fn label_subset(&self) -> &[usize] {
        &self.label_subset
    }
}

/// `Z3` shown as `{0, +1, -1}` with `op(x, y) = y - x`, vertex labels `{0, 1}`.
pub fn z3_minus_instance() -> CordialInstance {
    let table = CayleyTable::from_fn(3, |x, y| (y + 3 - x) % 3)
        .expect("entries reduced mod 3")
        .with_names(vec!["0".into(), "+1".into(), "-1".into()])
        .expect("three names");
    CordialInstance::new(table, &[0, 1]).expect("subset within Z3")
}

/// Labels indexed by vertex, each an element of the table.
pub type ElementLabeling = Vec<usize>;

/// Counts pairwise within one.
fn counts_balanced(counts: &[usize]) -> bool {
    match (counts.iter().min(), counts.iter().max()) {
        (Some(lo), Some(hi)) => hi - lo <= 1,
        _ => true,
    }
}

/// Depth-first search over vertex labelings balanced over `alphabet`, vertex
/// 0 varying slowest and elements in ascending order; returns the first one
/// accepted by `accept`.
fn first_balanced_labeling(
    n: usize,
    alphabet: &[usize],
    mut accept: impl FnMut(&[usize]) -> bool,
) -> Option<ElementLabeling> {
    let k = alphabet.len();
    let cap = n.div_ceil(k);
    let floor = n / k;
    let mut labels = vec![0usize; n];
    let mut counts = vec![0usize; k];

    fn go(
        v: usize,
        labels: &mut Vec<usize>,
        counts: &mut Vec<usize>,
        alphabet: &[usize],
        cap: usize,
        floor: usize,
        accept: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if v == labels.len() {
            return counts.iter().all(|&c| c >= floor) && accept(labels);
        }
        for (i, &a) in alphabet.iter().enumerate() {
            if counts[i] == cap {
                continue;
            }
            counts[i] += 1;
            labels[v] = a;
            if go(v + 1, labels, counts, alphabet, cap, floor, accept) {
                return true;
            }
            counts[i] -= 1;
        }
        false
    }

    go(
        0,
        &mut labels,
        &mut counts,
        alphabet,
        cap,
        floor,
        &mut accept,
    )
    .then_some(labels)
}

/// First `S`-balanced labeling whose induced arc labels are balanced over `Q`.
pub fn is_subset_q_cordial(d: &Digraph, inst: &CordialInstance) -> Option<ElementLabeling> {
    let table = inst.table();
    let mut counts = vec![0usize; table.order()];
    first_balanced_labeling(d.vertex_count(), inst.label_subset(), |f| {
        counts.iter_mut().for_each(|c| *c = 0);
        for &(t, h) in d.arcs() {
            counts[table.op(f[t], f[h])] += 1;
        }
        counts_balanced(&counts)
    })
}

/// First labeling balanced over `A` whose edge labels `f(u) + f(v)` are
/// balanced over `A`. The table must be commutative.
pub fn is_a_cordial(g: &Graph, a_table: &CayleyTable) -> Result<Option<ElementLabeling>> {
    if !a_table.is_commutative() {
        return Err(Error::NonCommutative);
    }
    if a_table.order() == 0 {
        return Err(Error::EmptySubset);
    }
    let elements: Vec<usize> = (0..a_table.order()).collect();
    let mut counts = vec![0usize; a_table.order()];
    Ok(first_balanced_labeling(g.vertex_count(), &elements, |f| {
        counts.iter_mut().for_each(|c| *c = 0);
        for &(u, v) in g.edges() {
            counts[a_table.op(f[u], f[v])] += 1;
        }
        counts_balanced(&counts)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{gamma_triple, is_balanced_triple, is_cordial};
    use crate::labeling::{GammaTriple, VertexLabeling};
    use crate::named::{alternating_path, path_graph};

    fn klein() -> CayleyTable {
        CayleyTable::from_fn(4, |a, b| a ^ b).unwrap()
    }

    #[test]
    fn latin_checks() {
        assert!(validate_latin(&CayleyTable::cyclic(3)));
        let bad = CayleyTable::from_rows(&[vec![0, 0, 1], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert!(!validate_latin(&bad));
        assert!(validate_latin(z3_minus_instance().table()));
        assert!(validate_latin(&klein()));
        assert!(validate_latin(&CayleyTable::cyclic(0)));
    }

    #[test]
    fn single_swaps_break_group_tables() {
        let tables: Vec<CayleyTable> = (1..=5).map(CayleyTable::cyclic).chain([klein()]).collect();
        for t in tables {
            assert!(validate_latin(&t));
            for row in 0..t.order() {
                for a in 0..t.order() {
                    for b in a + 1..t.order() {
                        let mut c = t.clone();
                        c.swap_in_row(row, a, b);
                        assert!(!validate_latin(&c));
                    }
                }
            }
        }
    }

    #[test]
    fn table_construction_errors() {
        assert!(matches!(
            CayleyTable::from_rows(&[vec![0, 1], vec![1]]),
            Err(Error::RaggedTable { row: 1, .. })
        ));
        assert!(matches!(
            CayleyTable::from_rows(&[vec![0, 2], vec![1, 0]]),
            Err(Error::EntryOutOfRange { entry: 2, order: 2 })
        ));
        assert!(matches!(
            CordialInstance::new(CayleyTable::cyclic(3), &[]),
            Err(Error::EmptySubset)
        ));
        assert!(matches!(
            CordialInstance::new(CayleyTable::cyclic(3), &[0, 3]),
            Err(Error::SubsetOutOfRange { element: 3, .. })
        ));
    }

    #[test]
    fn parse_round_trip() {
        let t = CayleyTable::cyclic(4);
        assert_eq!(CayleyTable::parse(&t.to_string()).unwrap(), t);
        let text = "# z2\n2\n0 1\n1 0\n";
        assert_eq!(CayleyTable::parse(text).unwrap(), CayleyTable::cyclic(2));
        assert!(CayleyTable::parse("2\n0 1\n").is_err());
        assert!(CayleyTable::parse("2\n0 1\n1 x\n").is_err());
    }

    #[test]
    fn z3_minus_operation() {
        let inst = z3_minus_instance();
        let t = inst.table();
        assert_eq!(t.op(0, 1), 1);
        assert_eq!(t.name(t.op(0, 1)), "+1");
        assert_eq!(t.op(1, 1), 0);
        assert_eq!(t.op(1, 0), 2);
        assert_eq!(t.name(2), "-1");
        assert_eq!(inst.label_subset(), &[0, 1]);
    }

    #[test]
    fn subset_cordial_examples() {
        let inst = z3_minus_instance();
        let arc = Digraph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(is_subset_q_cordial(&arc, &inst), Some(vec![0, 1]));
        assert_eq!(
            is_subset_q_cordial(&alternating_path(10).unwrap(), &inst),
            None
        );
    }

    #[test]
    fn subset_cordial_matches_engine_on_paths() {
        let inst = z3_minus_instance();
        for n in 1..=8 {
            for d in crate::search::path_orientation_digraphs(n).unwrap() {
                let q = is_subset_q_cordial(&d, &inst);
                assert_eq!(q.is_some(), is_cordial(&d).is_some());
                if let Some(f) = q {
                    let labels: Vec<u8> = f.iter().map(|&x| x as u8).collect();
                    let l = VertexLabeling::from_labels(&labels).unwrap();
                    assert!(is_balanced_triple(&gamma_triple(&d, &l).unwrap()));
                }
            }
        }
    }

    #[test]
    fn arc_balance_over_z3_is_triple_balance() {
        // Counts over Z3 indices (0, +1, -1) are (gamma, alpha, beta).
        for alpha in 0..5 {
            for beta in 0..5 {
                for gamma in 0..5 {
                    assert_eq!(
                        counts_balanced(&[gamma, alpha, beta]),
                        is_balanced_triple(&GammaTriple::new(alpha, beta, gamma))
                    );
                }
            }
        }
    }

    #[test]
    fn a_cordial_examples() {
        let z2 = CayleyTable::cyclic(2);
        let p3 = path_graph(3).unwrap();
        assert_eq!(is_a_cordial(&p3, &z2).unwrap(), Some(vec![0, 0, 1]));
        let single = Graph::new(1, &[]).unwrap();
        assert_eq!(is_a_cordial(&single, &z2).unwrap(), Some(vec![0]));
        let nonabelian = CayleyTable::from_fn(3, |x, y| (y + 3 - x) % 3).unwrap();
        assert_eq!(is_a_cordial(&p3, &nonabelian), Err(Error::NonCommutative));
    }

    #[test]
    fn vertex_balance_requires_surjectivity_when_possible() {
        // Three vertices over Z3 must use each element once.
        let z3 = CayleyTable::cyclic(3);
        let empty = Graph::new(3, &[]).unwrap();
        let f = is_a_cordial(&empty, &z3).unwrap().unwrap();
        let mut sorted = f.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2]);
        // Two vertices over Z3 cannot cover it; any two distinct labels pass.
        let two = Graph::new(2, &[]).unwrap();
        assert_eq!(is_a_cordial(&two, &z3).unwrap(), Some(vec![0, 1]));
    }
}
