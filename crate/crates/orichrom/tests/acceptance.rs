//! Acceptance suite: one test per verification criterion, each printing a
//! pass/fail line. Run with `cargo test --test acceptance -- --nocapture`
//! to see every line; failures print their details either way.

use orichrom::checks::{run_theorem, CheckContext};

fn run(name: &str) {
    let ctx = CheckContext::default();
    let outcome = run_theorem(name, &ctx).expect("check ran to completion");
    println!("{}", outcome.summary);
    for line in &outcome.details {
        println!("  {line}");
    }
    assert!(
        outcome.passed,
        "{}\n{}",
        outcome.summary,
        outcome.details.join("\n")
    );
}

#[test]
fn criterion_01_c3() {
    run("c3");
}

#[test]
fn criterion_02_bipartite_chi_o() {
    run("bipartite-chi-o");
}

#[test]
fn criterion_03_bipartite_hom() {
    run("bipartite-hom");
}

#[test]
fn criterion_04_strong_paths() {
    run("strong-paths");
}

#[test]
fn criterion_05_t7_grid() {
    run("t7-grid");
}

#[test]
fn criterion_06_lexico_paths() {
    run("lexico-paths");
}

#[test]
fn criterion_07_c3_grid() {
    run("c3-grid");
}

#[test]
fn criterion_08_epsilon() {
    run("epsilon");
}

#[test]
fn criterion_09_square_coloring() {
    run("square-coloring");
}

#[test]
fn criterion_10_cartesian_w() {
    run("cartesian-w");
}

#[test]
fn criterion_11_direct_w() {
    run("direct-w");
}

#[test]
fn criterion_12_sampled_w() {
    run("sampled-w");
}

#[test]
fn criterion_13_product_properties() {
    run("product-properties");
}
