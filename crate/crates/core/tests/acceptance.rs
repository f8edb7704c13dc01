//! Reproduction criteria. Each test prints one PASS/FAIL line; run with
//! `cargo test -p cordial --test acceptance -- --nocapture --test-threads=1`
//! to see the table.

use cordial::verification::{criteria, Outcome};

fn run(id: u32) -> Outcome {
    let c = criteria()
        .into_iter()
        .find(|c| c.id == id)
        .expect("criterion exists");
    let outcome = c.run();
    println!("{}", outcome.line());
    outcome
}

macro_rules! criterion {
    ($name:ident, $id:expr) => {
        #[test]
        fn $name() {
            let o = run($id);
            assert!(o.passed(), "{}", o.line());
        }
    };
}

criterion!(c01_alternating_ten_path_not_cordial, 1);
criterion!(c02_p10_orientation_search, 2);
criterion!(c03_path_landscape_and_alternating_scan, 3);
criterion!(c04_degree_three_tree_not_orientable, 4);
criterion!(c05_petersen_not_orientable, 5);
criterion!(c06_lambda_window_matches_brute_force, 6);
criterion!(c07_edge_count_bound, 7);
criterion!(c08_tournament_survey, 8);
criterion!(c09_reversal_complement_identities, 9);
criterion!(c10_quasigroup_equivalence, 10);
criterion!(c11_path_dp_matches_scan, 11);

#[test]
fn every_criterion_has_a_test() {
    let ids: Vec<u32> = criteria().iter().map(|c| c.id).collect();
    assert_eq!(ids, (1..=11).collect::<Vec<_>>());
}
