//! Acceptance criteria, one pass/fail line each. Exits nonzero if any fails.

use std::collections::HashSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use homlab::checks::{
    check_cycle_conjecture, check_extended_extremality, check_kahn_baseline, check_star_conjecture, check_transform_identities,
    check_triangle_free_conjecture, check_wr_extremality, find_star_crossover, Context, IdentityConfig, Scope,
};
use homlab::config::{bipartite_family, family, weighted_label, weightings};
use homlab::report::CheckReport;
use homlab_core::census::{census_count, enumerate_regular, enumerate_regular_naive, Filters};
use homlab_core::constructions::{complete, cycle, double_cover_plus_matching, h_ind, h_wr, petersen};
use homlab_core::partition::{brute_force_z, hom_count_dp, min_degree_order};
use homlab_core::{ExactValue, SimpleGraph};

const IDENTITY_TIME_LIMIT: Duration = Duration::from_secs(120);
const SWEEP_TIME_LIMIT: Duration = Duration::from_secs(15 * 60);
const SEED: u64 = 20240101;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn identity_config() -> IdentityConfig {
    IdentityConfig {
        census_scopes: vec![Scope::new(2, 10), Scope::new(3, 10)],
        include_petersen: true,
        ext_cover_trials: 200,
        ext_cover_max_source_vertices: 7,
        ext_cover_max_target_side: 4,
        ext_cover_max_target_edges: 8,
        max_weight: 10,
        tensor_trials: 50,
        tensor_max_source_vertices: 6,
        tensor_max_factor_vertices: 3,
        product_trials: 20,
        product_max_side: 3,
        product_max_edges: 5,
    }
}

fn label_starts(r: &homlab::report::Record, prefix: &str) -> bool {
    r.label.as_deref().is_some_and(|l| l.starts_with(prefix))
}

fn census_size(scope: Scope, filters: Filters) -> usize {
    (1..=scope.n_max).filter(|n| (n * scope.d).is_multiple_of(2)).map(|n| census_count(n, scope.d, filters).unwrap()).sum()
}

/// Every census graph appears exactly once and no record is a counterexample.
fn sweep_clean(rep: &CheckReport, scope: Scope, filters: Filters) -> bool {
    let distinct: HashSet<&str> = rep.records.iter().map(|r| r.graph6.as_str()).collect();
    rep.summary.verified && rep.audit_failures() == 0 && distinct.len() == rep.records.len() && rep.records.len() == census_size(scope, filters)
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let ctx = Context::new(SEED, true);
    let rep = check_transform_identities(&ctx, &identity_config()).expect("identity suite runs");
    let cover: Vec<_> = rep.records.iter().filter(|r| label_starts(r, "double-cover")).collect();
    let ext_cover: Vec<_> = rep.records.iter().filter(|r| label_starts(r, "ext-cover#")).collect();
    let expected_cover = census_size(Scope::new(2, 10), Filters::NONE) + census_size(Scope::new(3, 10), Filters::NONE) + 1;
    let failures = cover.iter().chain(&ext_cover).filter(|r| !r.ok).count();

    // both sides for the Petersen graph by brute force: 3^10 maps and 2^20 maps
    let p = petersen();
    let lhs = brute_force_z(&p, &h_wr());
    let rhs = brute_force_z(&double_cover_plus_matching(&p).to_simple(), &h_ind());
    let elapsed = start.elapsed();
    let pass = failures == 0
        && cover.len() == expected_cover
        && ext_cover.len() == 200
        && lhs == rhs
        && rep.audit_failures() == 0
        && elapsed < IDENTITY_TIME_LIMIT;
    verdict(
        pass,
        format!(
            "{} double-cover graphs, {} ext-cover trials, {failures} failures; Petersen brute force {lhs} = {rhs}; {:.1}s (limit {}s)",
            cover.len(),
            ext_cover.len(),
            elapsed.as_secs_f64(),
            IDENTITY_TIME_LIMIT.as_secs()
        ),
    )
}

fn criterion_2() -> Verdict {
    let ctx = Context::new(SEED, false);
    let rep = check_transform_identities(
        &ctx,
        &IdentityConfig { census_scopes: vec![], include_petersen: false, ext_cover_trials: 0, tensor_trials: 0, ..identity_config() },
    )
    .expect("identity suite runs");
    let named = ["ext-line(path:4) ~ wr", "looped-part(ind^K2) ~ wr", "ext-line(cycle:4) ~ complete:4:looped"];
    let named_ok = named.iter().all(|n| rep.records.iter().any(|r| r.label.as_deref() == Some(n) && r.ok));
    let products: Vec<_> = rep.records.iter().filter(|r| label_starts(r, "product#")).collect();
    let products_ok = products.len() == 20 && products.iter().all(|r| r.ok);
    verdict(
        named_ok && products_ok,
        format!(
            "named isomorphisms {}, {} / 20 product pairs isomorphic",
            if named_ok { "hold" } else { "FAIL" },
            products.iter().filter(|r| r.ok).count()
        ),
    )
}

fn criterion_3() -> Verdict {
    let start = Instant::now();
    let ctx = Context::new(SEED, true);
    let mut lines = Vec::new();
    let mut pass = true;
    for scope in [Scope::new(3, 10), Scope::new(4, 10)] {
        let rep = check_wr_extremality(&ctx, scope).unwrap();
        pass &= sweep_clean(&rep, scope, Filters::NONE);
        lines.push(format!("WR {scope}: {} graphs", rep.records.len()));
    }
    let scope = Scope::new(3, 10);
    let mut ext_reports = 0;
    for spec in ["path:4", "path:5", "path:6", "cycle:6", "cycle:8"] {
        let h = bipartite_family(spec).unwrap();
        for hw in weightings(SEED, spec, &h, 5, 10) {
            let rep = check_extended_extremality(&ctx, &hw, &weighted_label(spec, &hw), scope).unwrap();
            pass &= sweep_clean(&rep, scope, Filters::NONE);
            ext_reports += 1;
        }
    }
    pass &= ext_reports == 30;
    lines.push(format!("gen/weighted: {ext_reports} (H, weights) pairs"));
    let scope = Scope::new(3, 12);
    for spec in ["path:2", "path:3", "path:4"] {
        let rep = check_kahn_baseline(&ctx, &bipartite_family(spec).unwrap(), spec, scope).unwrap();
        pass &= sweep_clean(&rep, scope, Filters::bipartite());
        lines.push(format!("gen3 {spec}: {} graphs", rep.records.len()));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < SWEEP_TIME_LIMIT;
    verdict(pass, format!("{}; {:.1}s (limit {}s)", lines.join(", "), elapsed.as_secs_f64(), SWEEP_TIME_LIMIT.as_secs()))
}

fn criterion_4() -> Verdict {
    let cases: [(&str, SimpleGraph, bool, u64); 4] = [
        ("hom(K4,H_WR)", complete(4), true, 31),
        ("hom(C4,H_WR)", cycle(4), true, 35),
        ("hom(C5,H_WR)", cycle(5), true, 83),
        ("hom(C4,H_ind)", cycle(4), false, 7),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, g, wr, expected) in cases {
        let h = if wr { h_wr() } else { h_ind() };
        let brute = brute_force_z(&g, &h);
        let dp = hom_count_dp(&g, &h, &min_degree_order(g.adjacency())).unwrap();
        let expected = ExactValue::from(expected);
        pass &= brute == expected && dp == expected;
        parts.push(format!("{name}: brute {brute}, dp {dp}"));
    }
    verdict(pass, parts.join("; "))
}

fn criterion_5() -> Verdict {
    let expected = [(4, 1), (6, 2), (8, 5), (10, 19)];
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, want) in expected {
        let orderly = enumerate_regular(n, 3, Filters::connected()).unwrap().len();
        let naive = enumerate_regular_naive(n, 3, Filters::connected()).unwrap().len();
        pass &= orderly == want && naive == want;
        parts.push(format!("n={n}: {orderly}/{naive}"));
    }
    verdict(pass, format!("orderly/naive {}", parts.join(", ")))
}

fn criterion_6() -> Verdict {
    let six = find_star_crossover(6, 1..=30).unwrap();
    let wr = find_star_crossover(3, 1..=30).unwrap();
    let d6 = six.minimal_d();
    let pass = d6.is_some() && wr.minimal_d().is_none() && six.rows[0].outcome == std::cmp::Ordering::Equal;
    let witness = d6.map(|d| {
        let r = &six.rows[d - 1];
        format!("d={d}: hom(K_{},S_6^o)={} vs hom(K_{{{d},{d}}},S_6^o)={}", d + 1, r.clique, r.biclique)
    });
    verdict(
        pass,
        format!(
            "S_6^o minimal crossover {}; H_WR crossover in 1..=30: {}",
            witness.unwrap_or_else(|| "none".into()),
            if wr.minimal_d().is_none() { "none" } else { "FOUND" }
        ),
    )
}

fn criterion_7() -> Verdict {
    let ctx = Context::new(SEED, true);
    let scopes = [Scope::new(3, 10), Scope::new(4, 8)];
    let mut reports = Vec::new();
    for k in [4, 5, 6, 7, 8] {
        for s in scopes {
            reports.push(check_cycle_conjecture(&ctx, k, s));
        }
    }
    for k in [4, 6] {
        for s in scopes {
            reports.push(check_star_conjecture(&ctx, k, s));
        }
    }
    for t in ["wr", "ind", "path:3", "cycle:5:looped", "star:4:looped", "star:6:looped", "complete:3"] {
        reports.push(check_triangle_free_conjecture(&ctx, &family(t).unwrap(), t, Scope::new(3, 12)));
    }
    let errors = reports.iter().filter(|r| r.is_err()).count();
    let reports: Vec<CheckReport> = reports.into_iter().filter_map(Result::ok).collect();
    let audit_failures: usize = reports.iter().map(CheckReport::audit_failures).sum();
    let audited: usize = reports.iter().filter_map(|r| r.summary.audit.as_ref()).map(|a| a.sampled).sum();
    let found: Vec<String> = reports.iter().filter(|r| !r.summary.verified).map(|r| format!("{} {}", r.check, r.target)).collect();
    verdict(
        errors == 0 && audit_failures == 0 && audited > 0,
        format!(
            "{} instances, {errors} errors, {audited} audited records, {audit_failures} audit failures; counterexamples: {}",
            reports.len(),
            if found.is_empty() { "none".into() } else { found.join(", ") }
        ),
    )
}

fn criterion_8() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_homlab"))
            .args(["run-all", "--seed", "7", "--out"])
            .arg(&path)
            .stderr(std::process::Stdio::null())
            .status()
            .unwrap();
        (status.success(), std::fs::read(&path).unwrap_or_default())
    };
    let (ok1, a) = run("a.jsonl");
    let (ok2, b) = run("b.jsonl");
    verdict(ok1 && ok2 && !a.is_empty() && a == b, format!("two run-all reports of {} bytes, identical: {}", a.len(), a == b))
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("identity suite", criterion_1),
        ("structural isomorphisms", criterion_2),
        ("theorem sweeps", criterion_3),
        ("spot values", criterion_4),
        ("census integrity", criterion_5),
        ("star crossover", criterion_6),
        ("conjecture sweeps", criterion_7),
        ("determinism", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let out = run();
        failed += usize::from(!out.pass);
        println!("{} criterion {} ({name}): {}", if out.pass { "PASS" } else { "FAIL" }, i + 1, out.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
