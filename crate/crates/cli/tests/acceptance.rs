//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Library checks are called directly; the last criterion
//! drives the `dynred` binary.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use dynred::dra::{self, DraAlgebra};
use dynred::rmatrix::{self, RMatrixSuite};
use dynred::weyl::{self, WeylAlgebra, WeylConfig};
use dynred::{CheckReport, Coeff};

type Verdict = Result<String, String>;

/// Fails unless every report passed; otherwise summarizes the checked counts.
fn all_pass(reports: &[CheckReport]) -> Verdict {
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    match reports.iter().find(|r| !r.passed()) {
        Some(r) => Err(format!(
            "{}: {} of {} failed, first {:?}",
            r.identity,
            r.failures.len(),
            r.checked,
            r.failures.first().map(|f| (&f.indices, &f.lhs, &f.rhs))
        )),
        None => Ok(format!("{} reports, {checked} components", reports.len())),
    }
}

fn find<'a>(reports: &'a [CheckReport], identity: &str) -> Result<&'a CheckReport, String> {
    reports
        .iter()
        .find(|r| r.identity == identity)
        .ok_or_else(|| format!("missing report {identity}"))
}

fn within(limit: Duration, start: Instant, detail: String) -> Verdict {
    let took = start.elapsed();
    if took > limit {
        Err(format!("{detail}; took {took:.1?}, limit {limit:?}"))
    } else {
        Ok(detail)
    }
}

fn lib<T>(r: dynred::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn rmatrix_suite() -> Verdict {
    let start = Instant::now();
    let mut reports = Vec::new();
    for n in 2..=4 {
        reports.extend(rmatrix::run_suite(n, RMatrixSuite::All));
    }
    let detail = all_pass(&reports)?;
    within(Duration::from_secs(60), start, detail)
}

fn trace_q() -> Verdict {
    for n in 1..=6 {
        let target = Coeff::integer(n, n as i64);
        let plus = rmatrix::q_plus_matrix(n).trace();
        let minus = rmatrix::q_minus_matrix(n).trace();
        if plus != target || minus != target {
            return Err(format!("n = {n}: Tr Q+ = {plus}, Tr Q- = {minus}"));
        }
    }
    all_pass(&(1..=6).map(rmatrix::check_traces).collect::<Vec<_>>())
}

fn weyl_associativity() -> Verdict {
    let start = Instant::now();
    let mut reports = Vec::new();
    for n in [2, 3] {
        for copies in [1, 2] {
            for fermionic in [false, true] {
                let mut cfg = WeylConfig::new(n, copies);
                if fermionic {
                    cfg = cfg.fermionic();
                }
                let alg = lib(WeylAlgebra::new(cfg))?;
                let rep = weyl::associativity(&alg);
                let gens = cfg.generators().len();
                if rep.checked != gens.pow(3) {
                    return Err(format!("{n},{copies}: {} of {} triples checked", rep.checked, gens.pow(3)));
                }
                reports.push(rep);
            }
        }
    }
    let detail = all_pass(&reports)?;
    within(Duration::from_secs(300), start, detail)
}

fn weyl_reflection() -> Verdict {
    let start = Instant::now();
    let mut configs: Vec<WeylConfig> = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]
        .into_iter()
        .map(|(n, c)| WeylConfig::new(n, c))
        .collect();
    configs.push(WeylConfig::new(2, 2).fermionic());
    let mut reports = Vec::new();
    for cfg in configs {
        reports.push(weyl::check_reflection(&lib(WeylAlgebra::new(cfg))?));
    }
    let detail = all_pass(&reports)?;
    within(Duration::from_secs(600), start, detail)
}

fn appendix() -> Verdict {
    let reports = lib(dra::appendix_check())?;
    let ordering = find(&reports, "appendix_ordering")?;
    let homogeneous = find(&reports, "appendix_cross_homogeneous")?;
    let constant = find(&reports, "appendix_cross_constant")?;
    all_pass(&[ordering.clone(), homogeneous.clone(), constant.clone()])?;
    if ordering.checked != 12 {
        return Err(format!("ordering: {} checks, expected 12", ordering.checked));
    }
    // twelve relations under both conventions
    if homogeneous.checked != 24 {
        return Err(format!("cross homogeneous: {} checks, expected 24", homogeneous.checked));
    }
    let discrepancy = constant
        .notes
        .iter()
        .find(|n| n.starts_with("printed constants differ"))
        .ok_or("constant discrepancy not reported")?;
    if !constant.notes.iter().any(|n| n == "adopted: kronecker") {
        return Err(format!("convention not settled: {:?}", constant.notes));
    }
    Ok(format!("{discrepancy}; adopted kronecker"))
}

fn centrality() -> Verdict {
    let start = Instant::now();
    let mut reports = Vec::new();
    for (n, power) in [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2)] {
        let alg = lib(DraAlgebra::single(n))?;
        let reps = dra::check_central(&alg, power);
        find(&reps, "central_prime")?;
        reports.extend(reps);
    }
    let detail = all_pass(&reports)?;
    // closed form for n = 2, compared as strings for powers 1..=4
    let closed = lib(dra::appendix_check())?;
    let central = find(&closed, "appendix_central")?;
    all_pass(std::slice::from_ref(central))?;
    let printed = "(h1-h2-1)/(h1-h2)*L[1,1] + (h1-h2+1)/(h1-h2)*L[2,2]";
    let got = dra::central_element(&lib(DraAlgebra::single(2))?, 1).to_string();
    if got != printed {
        return Err(format!("power 1: {got} != {printed}"));
    }
    within(Duration::from_secs(900), start, format!("{detail}; closed form 1..=4 byte-exact"))
}

fn h_realization() -> Verdict {
    let mut reports = Vec::new();
    for n in 1..=4 {
        reports.push(dra::check_h_realization(n));
        reports.push(dra::check_mixed_identity(n));
    }
    all_pass(&reports)
}

fn braided() -> Verdict {
    let mut reports = Vec::new();
    for n in [2, 3] {
        let reps = lib(dra::coproduct_check(n))?;
        find(&reps, "coproduct_reflection")?;
        find(&reps, "coassociativity")?;
        reports.extend(reps);
    }
    for copies in [2, 3] {
        let alg = lib(WeylAlgebra::new(WeylConfig::new(2, copies)))?;
        reports.extend(lib(weyl::split_realization(&alg, 1))?);
    }
    all_pass(&reports)
}

fn zhelobenko() -> Verdict {
    let mut reports = Vec::new();
    for n in [2, 3] {
        let alg = lib(WeylAlgebra::new(WeylConfig::new(n, 1)))?;
        let reps = weyl::verify_zhelobenko(&alg);
        let rel = find(&reps, "zhelobenko_relation")?;
        if rel.checked == 0 {
            return Err(format!("n = {n}: no relation images checked"));
        }
        if n == 3 && find(&reps, "zhelobenko_braid")?.checked == 0 {
            return Err("braid relation not checked".into());
        }
        reports.extend(reps);
        reports.push(lib(weyl::mu_consistency(n))?);
    }
    all_pass(&reports)
}

fn transforms() -> Verdict {
    let mut reports = Vec::new();
    for n in 2..=4 {
        let reps = dra::generator_transforms(n);
        find(&reps, "l_plus_l_prime")?;
        find(&reps, "transition_triangular")?;
        reports.extend(reps);
    }
    all_pass(&reports)
}

fn dynred(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dynred"))
        .args(args)
        .output()
        .expect("run dynred")
}

/// The report with its wall-time field removed.
fn without_wall_time(stdout: &[u8]) -> Result<serde_json::Value, String> {
    let mut v: serde_json::Value = serde_json::from_slice(stdout).map_err(|e| e.to_string())?;
    v.as_object_mut().ok_or("report is not an object")?.remove("wall_time");
    Ok(v)
}

fn cli() -> Verdict {
    let expect_code = |args: &[&str], code: i32| -> Result<Output, String> {
        let out = dynred(args);
        match out.status.code() {
            Some(c) if c == code => Ok(out),
            c => Err(format!("dynred {}: exit {c:?}, expected {code}", args.join(" "))),
        }
    };

    let rel = ["relations", "--n", "2"];
    let (a, b) = (expect_code(&rel, 0)?, expect_code(&rel, 0)?);
    if a.stdout != b.stdout || a.stdout.is_empty() {
        return Err("relations output differs between runs".into());
    }

    let all = ["verify", "all", "--n", "2", "--N", "2"];
    let (a, b) = (expect_code(&all, 0)?, expect_code(&all, 0)?);
    if without_wall_time(&a.stdout)? != without_wall_time(&b.stdout)? {
        return Err("verify all output differs between runs".into());
    }
    // byte-identical once the timing line is dropped
    let strip = |o: &Output| -> Vec<String> {
        String::from_utf8_lossy(&o.stdout)
            .lines()
            .filter(|l| !l.trim_start().starts_with("\"wall_time\""))
            .map(str::to_string)
            .collect()
    };
    if strip(&a) != strip(&b) {
        return Err("verify all output not byte-identical modulo wall_time".into());
    }

    let text = expect_code(&["central", "--n", "2", "--power", "1"], 0)?;
    let printed = "(h1-h2-1)/(h1-h2)*L[1,1] + (h1-h2+1)/(h1-h2)*L[2,2]\n";
    if text.stdout != printed.as_bytes() {
        return Err(format!("central: {:?}", String::from_utf8_lossy(&text.stdout)));
    }

    let failing = ["verify", "weyl", "--n", "2", "--N", "2", "--suite", "reflection", "--cross-constant", "all-copies"];
    expect_code(&failing, 1)?;
    expect_code(&["verify", "rmatrix", "--n", "0"], 2)?;
    expect_code(&["verify", "rmatrix", "--n", "7"], 2)?;
    expect_code(&["verify", "dra", "--N", "2"], 2)?;
    expect_code(&["normal-form", "--n", "2", "--expr", "x[1,1]*"], 2)?;
    expect_code(&["frobnicate"], 2)?;
    Ok("relations and verify all deterministic; exit codes 0/1/2".into())
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("R-matrix suite n=2,3,4 under 1 minute", rmatrix_suite),
        ("Tr Q+ = Tr Q- = n for n <= 6", trace_q),
        ("Weyl degree-3 associativity, exhaustive", weyl_associativity),
        ("Ltilde reflection equation", weyl_reflection),
        ("rank-two tables regression", appendix),
        ("centrality of Tr(L^N Q-) and Tr(L'^N Q-)", centrality),
        ("H realization and mixed identity n <= 4", h_realization),
        ("braided coproduct and split realization", braided),
        ("Zhelobenko suite", zhelobenko),
        ("L + L' = H and transition matrices n=2,3,4", transforms),
        ("CLI determinism and exit codes", cli),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let took = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name} ({took:.1}s): {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({took:.1}s): {detail}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
