//! One test per acceptance criterion. Each prints a single pass/fail line
//! straight to stderr so the line survives output capture.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use cmsz_core::appendix_search::eigen_bound_certificate;
use cmsz_core::exact_ring::PadicConfig;
use cmsz_core::finite_unitary::{enumerate_u0, MODEL_ORDER, U0_ORDER, U1_ORDER, U1_PLUS_ORDER};
use cmsz_core::hermitian_core::rat;
use cmsz_core::report::{run_suite, Claim, Context, Status, Suite};

fn context() -> Context {
    Context::new(PadicConfig::default(), 2).expect("generators derive")
}

fn suite(ctx: &Context, name: &str) -> Suite {
    run_suite(ctx, name).expect("suite runs")
}

fn claim<'a>(s: &'a Suite, id: &str) -> &'a Claim {
    s.claim(id).unwrap_or_else(|| panic!("missing claim {id}"))
}

fn passes(s: &Suite, ids: &[&str]) -> Vec<String> {
    ids.iter()
        .filter(|id| claim(s, id).status != Status::Pass)
        .map(|id| id.to_string())
        .collect()
}

fn within(elapsed: Duration, limit_secs: u64) -> bool {
    elapsed <= Duration::from_secs(limit_secs)
}

fn verdict(n: u32, ok: bool, detail: &str, elapsed: Duration) {
    let line = format!(
        "criterion {n:>2}: {} ({detail}; {:.1}s)\n",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(ok, "criterion {n} failed: {detail}");
}

#[test]
fn criterion_01_group_orders() {
    let t = Instant::now();
    let ctx = context();
    let u0 = enumerate_u0().order();
    let en = ctx.u1().expect("level-1 enumeration");
    let image = ctx.model().image.order();
    let elapsed = t.elapsed();
    let ok = u0 == 432
        && u0 == U0_ORDER
        && en.u1.order() == 944_784
        && en.u1.order() == U1_ORDER
        && en.u1_plus.order() == 472_392
        && en.u1_plus.order() == U1_PLUS_ORDER
        && image == 34_992
        && image == MODEL_ORDER
        && within(elapsed, 120);
    let detail = format!(
        "orders {u0}, {}, {}, {image}",
        en.u1.order(),
        en.u1_plus.order()
    );
    verdict(1, ok, &detail, elapsed);
}

#[test]
fn criterion_02_generators() {
    let t = Instant::now();
    let ctx = context();
    let s = suite(&ctx, "verify-generators");
    let size = claim(&s, "generators.triangle_presentation").witness["size"].clone();
    let failing = passes(&s, &["generators.relations", "generators.triangle_presentation"]);
    verdict(2, failing.is_empty() && size == 21, &format!("|F| = {size}, failing {failing:?}"), t.elapsed());
}

#[test]
fn criterion_03_building_local() {
    let t = Instant::now();
    let ctx = context();
    let s = suite(&ctx, "verify-building");
    let elapsed = t.elapsed();
    let failing = passes(
        &s,
        &["building.neighbors", "building.tau_fixes_base", "building.label_cocycle"],
    );
    let radius = claim(&s, "building.label_cocycle").witness["radius"].clone();
    let ok = failing.is_empty() && radius == 2 && within(elapsed, 60);
    verdict(3, ok, &format!("radius {radius}, failing {failing:?}"), elapsed);
}

#[test]
fn criterion_04_relations() {
    let t = Instant::now();
    let ctx = context();
    let s = suite(&ctx, "verify-unitary");
    let failing = passes(&s, &["unitary.relations", "unitary.element_orders"]);
    let statements = claim(&s, "unitary.relations").witness["failing"].clone();
    verdict(
        4,
        failing.is_empty(),
        &format!("failing {failing:?}, relations not holding {statements}"),
        t.elapsed(),
    );
}

#[test]
fn criterion_05_classification() {
    let t = Instant::now();
    let ctx = context();
    let s = suite(&ctx, "classify-subgroups");
    let elapsed = t.elapsed();
    let w = &claim(&s, "classify.index3").witness;
    let ok = claim(&s, "classify.index3").status == Status::Pass
        && w["classes"] == 4
        && w["rho_bar_in_j3"] == true
        && w["tau_bar_in_j4"] == true
        && within(elapsed, 600);
    verdict(5, ok, &format!("{} classes", w["classes"]), elapsed);
}

#[test]
fn criterion_06_torsion() {
    let t = Instant::now();
    let ctx = context();
    let s = suite(&ctx, "verify-torsion");
    let hits: Vec<u64> = ["torsion.j1", "torsion.j2", "torsion.j3", "torsion.j4"]
        .iter()
        .map(|id| claim(&s, id).witness["hits"].as_u64().expect("hit count"))
        .collect();
    let ok = hits[0] == 0 && hits[1] == 0 && hits[2] > 0 && hits[3] > 0;
    verdict(6, ok, &format!("hits {hits:?}"), t.elapsed());
}

#[test]
fn criterion_07_appendix() {
    let t = Instant::now();
    let ctx = context();
    let s = suite(&ctx, "appendix-search");
    let elapsed = t.elapsed();
    let failing = passes(&s, &["appendix.v", "appendix.stabilizer", "appendix.cases"]);
    let v = &claim(&s, "appendix.v").witness;
    let found = &claim(&s, "appendix.stabilizer").witness["found"];
    let ok = failing.is_empty()
        && v["size"] == 24
        && v["seeds_present"] == true
        && *found == 6
        && within(elapsed, 60);
    verdict(7, ok, &format!("|V| = {}, {found} stabilizer matrices, failing {failing:?}", v["size"]), elapsed);
}

#[test]
fn criterion_08_eigen_bound() {
    let t = Instant::now();
    let e = eigen_bound_certificate().expect("certificate");
    let zero = rat(0, 1);
    let ok = e.bound == rat(48, 25)
        && e.f_at_bound < zero
        && e.f_at_two > zero
        && e.increasing
        && e.passed();
    verdict(
        8,
        ok,
        &format!("f(48/25) = {}, f(2) = {}", e.f_at_bound, e.f_at_two),
        t.elapsed(),
    );
}

#[test]
fn criterion_09_det_image() {
    let t = Instant::now();
    let ctx = context();
    let s = suite(&ctx, "verify-torsion");
    let failing = passes(&s, &["det_image.j1", "det_image.j2"]);
    let ok = failing.is_empty()
        && ["det_image.j1", "det_image.j2"].iter().all(|id| {
            let w = &claim(&s, id).witness;
            w["generated"].as_array().map(Vec::len) == Some(6)
        });
    verdict(9, ok, &format!("failing {failing:?}"), t.elapsed());
}

#[test]
fn criterion_10_division_algebra() {
    let t = Instant::now();
    let ctx = context();
    let s = suite(&ctx, "verify-algebra");
    let elapsed = t.elapsed();
    let failing = passes(
        &s,
        &[
            "algebra.sigma",
            "algebra.embedding",
            "algebra.star",
            "algebra.b",
            "algebra.psi_perfect",
            "algebra.det_3q",
        ],
    );
    let pairs = claim(&s, "algebra.embedding").witness["pairs"].clone();
    let nu2 = claim(&s, "algebra.psi_perfect").witness["nu2"].clone();
    let det = claim(&s, "algebra.det_3q").witness["det_3q"].clone();
    let ok = failing.is_empty() && pairs == 1000 && within(elapsed, 60);
    verdict(
        10,
        ok,
        &format!("{pairs} pairs, psi Gram nu2 = {nu2}, det(3Q) = {det}, failing {failing:?}"),
        elapsed,
    );
}

#[test]
fn criterion_11_determinism() {
    let t = Instant::now();
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_cmsz"))
            .args(["--threads", threads, "--json", "verify-all"])
            .output()
            .expect("binary runs")
    };
    let a = run("1");
    let b = run("2");
    let parsed: serde_json::Value = serde_json::from_slice(&a.stdout).expect("JSON output");
    let suites = parsed["suites"].as_array().map(Vec::len).unwrap_or(0);
    let ok = !a.stdout.is_empty() && a.stdout == b.stdout && suites == 8 && a.status.code() == b.status.code();
    verdict(
        11,
        ok,
        &format!("{} bytes, {suites} suites, identical {}", a.stdout.len(), a.stdout == b.stdout),
        t.elapsed(),
    );
}
