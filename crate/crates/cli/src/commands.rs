use minmat_core::det::{det_c_matrix_bareiss, det_min_matrix_bareiss};
use minmat_core::verify::{self, Suite, VerifyOptions};
use minmat_core::{
    build_c_matrix, build_delta_matrix, build_min_matrix, build_theta_matrix,
    covariance_deviation, delta_det_closed, det_bareiss, det_c_matrix, det_min_matrix,
    simulate_covariance, symfun_minor_sum_with_cap, theta_det_closed, Error, ExactMatrix,
    Increments, SimConfig, SymMethod,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::output::{column_header, csv_row, envelope, print_json, Format};
use crate::{DetMethodArg, KArg, MatrixKind, MatrixParams, Status, SuiteArg, SymMethodArg};

fn require<T: Copy>(value: Option<T>, flag: &str, kind: MatrixKind) -> Result<T, Error> {
    value.ok_or_else(|| Error::Usage(format!("{kind:?} needs --{flag}").to_lowercase()))
}

fn increments(params: &MatrixParams, kind: MatrixKind) -> Result<Increments, Error> {
    params
        .inc
        .as_deref()
        .ok_or_else(|| Error::Usage(format!("{kind:?} needs --inc").to_lowercase()))?
        .parse()
}

fn kind_name(kind: MatrixKind) -> &'static str {
    match kind {
        MatrixKind::Min => "min",
        MatrixKind::C => "c",
        MatrixKind::Delta => "delta",
        MatrixKind::Theta => "theta",
    }
}

pub fn build_matrix(kind: MatrixKind, params: &MatrixParams) -> Result<ExactMatrix, Error> {
    match kind {
        MatrixKind::Min => build_min_matrix(require(params.n, "n", kind)?),
        MatrixKind::C => build_c_matrix(require(params.n, "n", kind)?, require(params.k, "k", kind)?),
        MatrixKind::Delta => build_delta_matrix(&increments(params, kind)?),
        MatrixKind::Theta => build_theta_matrix(&increments(params, kind)?),
    }
}

fn rows_json(m: &ExactMatrix) -> Value {
    json!(m
        .rows()
        .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>())
        .collect::<Vec<_>>())
}

pub fn matrix(kind: MatrixKind, params: &MatrixParams, format: Format) -> Result<Status, Error> {
    let m = build_matrix(kind, params)?;
    match format {
        Format::Json => print_json(&envelope(
            "matrix",
            None,
            json!({ "kind": kind_name(kind), "dim": m.dim(), "rows": rows_json(&m) }),
        )),
        Format::Csv => {
            println!("{}", column_header(m.dim()));
            for row in m.rows() {
                println!("{}", csv_row(row));
            }
        }
        Format::Plain => print!("{m}"),
    }
    Ok(Status::Ok)
}

fn det_closed(kind: MatrixKind, params: &MatrixParams) -> Result<BigInt, Error> {
    match kind {
        MatrixKind::Min => det_min_matrix(require(params.n, "n", kind)?),
        MatrixKind::C => det_c_matrix(require(params.n, "n", kind)?, require(params.k, "k", kind)?),
        MatrixKind::Delta => Ok(delta_det_closed(&increments(params, kind)?)),
        MatrixKind::Theta => theta_det_closed(&increments(params, kind)?),
    }
}

fn det_elimination(kind: MatrixKind, params: &MatrixParams) -> Result<BigInt, Error> {
    match kind {
        MatrixKind::Min => det_min_matrix_bareiss(require(params.n, "n", kind)?),
        MatrixKind::C => {
            det_c_matrix_bareiss(require(params.n, "n", kind)?, require(params.k, "k", kind)?)
        }
        _ => Ok(det_bareiss(&build_matrix(kind, params)?)),
    }
}

pub fn det(
    kind: MatrixKind,
    params: &MatrixParams,
    method: DetMethodArg,
    format: Format,
) -> Result<Status, Error> {
    let mut values: Vec<(&str, BigInt)> = Vec::new();
    if matches!(method, DetMethodArg::Closed | DetMethodArg::Both) {
        values.push(("closed", det_closed(kind, params)?));
    }
    if matches!(method, DetMethodArg::Bareiss | DetMethodArg::Both) {
        values.push(("bareiss", det_elimination(kind, params)?));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    match format {
        Format::Json => print_json(&envelope(
            "det",
            None,
            json!({
                "kind": kind_name(kind),
                "values": values
                    .iter()
                    .map(|(m, v)| json!({ "method": m, "value": v.to_string() }))
                    .collect::<Vec<_>>(),
                "agree": agree,
            }),
        )),
        Format::Csv => {
            println!("method,value");
            for (m, v) in &values {
                println!("{}", csv_row([m.to_string(), v.to_string()]));
            }
        }
        Format::Plain => {
            if values.len() == 1 {
                println!("{}", values[0].1);
            } else {
                for (m, v) in &values {
                    println!("{m}: {v}");
                }
            }
        }
    }
    if !agree {
        eprintln!("closed form and Bareiss elimination disagree");
        return Ok(Status::Disagreement);
    }
    Ok(Status::Ok)
}

fn sym_method(m: SymMethodArg) -> Option<SymMethod> {
    Some(match m {
        SymMethodArg::Closed => SymMethod::Closed,
        SymMethodArg::Minors => SymMethod::Minors,
        SymMethodArg::Nested => SymMethod::Nested,
        SymMethodArg::Rec6 => SymMethod::Rec6,
        SymMethodArg::Rec7 => SymMethod::Rec7,
        SymMethodArg::Ratio => SymMethod::Ratio,
        SymMethodArg::All => return None,
    })
}

pub fn symfun(
    n: usize,
    k: KArg,
    method: SymMethodArg,
    minor_cap: usize,
    format: Format,
) -> Result<Status, Error> {
    if n == 0 {
        return Err(Error::Usage("symfun needs --n >= 1".into()));
    }
    let ks: Vec<usize> = match k {
        KArg::All => (0..=n).collect(),
        KArg::One(k) if k <= n => vec![k],
        KArg::One(k) => {
            return Err(Error::Usage(format!("need 0 <= k <= n, got n={n}, k={k}")));
        }
    };
    let methods: Vec<SymMethod> = match sym_method(method) {
        Some(m) => vec![m],
        None if n <= minor_cap => SymMethod::ALL.to_vec(),
        None => {
            eprintln!("note: n={n} exceeds the minor cap {minor_cap}; skipping minors");
            SymMethod::POLYNOMIAL.to_vec()
        }
    };

    let eval = |m: SymMethod, k: usize| match m {
        SymMethod::Minors => symfun_minor_sum_with_cap(n, k, minor_cap),
        _ => m.eval(n, k),
    };
    let mut rows = Vec::with_capacity(ks.len());
    for &k in &ks {
        let values = methods
            .iter()
            .map(|&m| eval(m, k))
            .collect::<Result<Vec<_>, _>>()?;
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        rows.push((k, values, agree));
    }
    let all_agree = rows.iter().all(|r| r.2);

    match format {
        Format::Json => print_json(&envelope(
            "symfun",
            None,
            json!({
                "n": n,
                "methods": methods.iter().map(|m| m.name()).collect::<Vec<_>>(),
                "rows": rows.iter().map(|(k, values, agree)| {
                    let by_method: serde_json::Map<String, Value> = methods
                        .iter()
                        .zip(values)
                        .map(|(m, v)| (m.name().to_string(), json!(v.to_string())))
                        .collect();
                    json!({ "k": k, "values": by_method, "agree": agree })
                }).collect::<Vec<_>>(),
                "agree": all_agree,
            }),
        )),
        Format::Csv => {
            println!(
                "{}",
                csv_row(["n", "k"].into_iter().chain(methods.iter().map(|m| m.name())))
            );
            for (k, values, _) in &rows {
                println!(
                    "{}",
                    csv_row(
                        [n.to_string(), k.to_string()]
                            .into_iter()
                            .chain(values.iter().map(|v| v.to_string()))
                    )
                );
            }
        }
        Format::Plain => {
            if rows.len() == 1 && methods.len() == 1 {
                println!("{}", rows[0].1[0]);
            } else {
                let header: Vec<&str> = methods.iter().map(|m| m.name()).collect();
                println!("k\t{}", header.join("\t"));
                for (k, values, agree) in &rows {
                    let cells: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                    let flag = if *agree { "" } else { "\tDISAGREE" };
                    println!("{k}\t{}{flag}", cells.join("\t"));
                }
            }
        }
    }
    if !all_agree {
        eprintln!("methods disagree");
        return Ok(Status::Disagreement);
    }
    Ok(Status::Ok)
}

pub fn verify(
    suite: SuiteArg,
    n_max: usize,
    seed: u64,
    minor_cap: usize,
    format: Format,
) -> Result<Status, Error> {
    let suites: Vec<Suite> = match suite {
        SuiteArg::Dets => vec![Suite::Dets],
        SuiteArg::Symfun => vec![Suite::Symfun],
        SuiteArg::Binomial => vec![Suite::Binomial],
        SuiteArg::Fibonacci => vec![Suite::Fibonacci],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let opts = VerifyOptions {
        n_max,
        seed,
        minor_cap,
        ..VerifyOptions::default()
    };
    let report = verify::run(&suites, &opts);
    match format {
        Format::Json => print_json(&envelope(
            "verify",
            Some(seed),
            json!({ "n_max": n_max, "passed": report.passed(), "checks": report.checks }),
        )),
        Format::Csv => {
            println!("suite,name,cases,passed,counterexample,note");
            for c in &report.checks {
                println!(
                    "{}",
                    csv_row([
                        c.suite.to_string(),
                        c.name.clone(),
                        c.cases.to_string(),
                        c.passed.to_string(),
                        c.counterexample.clone().unwrap_or_default(),
                        c.note.clone().unwrap_or_default(),
                    ])
                );
            }
        }
        Format::Plain => {
            for c in &report.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                print!("{tag} {}/{} ({} cases)", c.suite, c.name, c.cases);
                if let Some(note) = &c.note {
                    print!(" [{note}]");
                }
                println!();
                if let Some(ce) = &c.counterexample {
                    println!("    counterexample: {ce}");
                }
            }
            let verdict = if report.passed() { "all passed" } else { "FAILED" };
            println!("verify up to n={n_max}: {verdict}");
        }
    }
    Ok(if report.passed() {
        Status::Ok
    } else {
        Status::Disagreement
    })
}

pub fn simulate(
    cfg: SimConfig,
    max_deviation: Option<f64>,
    format: Format,
) -> Result<Status, Error> {
    let est = simulate_covariance(&cfg)?;
    let deviation = covariance_deviation(&est);
    match format {
        Format::Json => print_json(&envelope(
            "simulate",
            Some(cfg.seed),
            json!({
                "config": est.config,
                "m": est.m,
                "matrix": est.matrix,
                "deviation": deviation,
            }),
        )),
        Format::Csv => {
            println!("{}", column_header(cfg.n));
            for row in &est.matrix {
                println!("{}", csv_row(row));
            }
            eprintln!("deviation: {deviation}");
        }
        Format::Plain => {
            println!(
                "n={} m={} sigma={} seed={} dist={} chunks={}",
                cfg.n, cfg.m, cfg.sigma, cfg.seed, cfg.dist, cfg.chunks
            );
            for row in &est.matrix {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:9.4}")).collect();
                println!("{}", cells.join(" "));
            }
            println!("deviation: {deviation}");
        }
    }
    if let Some(limit) = max_deviation {
        if deviation > limit {
            eprintln!("deviation {deviation} exceeds {limit}");
            return Ok(Status::Disagreement);
        }
    }
    Ok(Status::Ok)
}
