//! Wall-clock comparison of the symmetric-function methods. No correctness
//! gating; values are not checked here.

use std::time::Instant;

use minmat_core::{symfun_minor_sum_with_cap, Error, SymMethod};
use serde_json::json;

use crate::output::{csv_row, envelope, print_json, Format};
use crate::{BenchMethod, Status};

fn method(m: BenchMethod) -> SymMethod {
    match m {
        BenchMethod::Closed => SymMethod::Closed,
        BenchMethod::Minors => SymMethod::Minors,
        BenchMethod::Nested => SymMethod::Nested,
        BenchMethod::Rec6 => SymMethod::Rec6,
        BenchMethod::Rec7 => SymMethod::Rec7,
        BenchMethod::Ratio => SymMethod::Ratio,
    }
}

struct Row {
    method: SymMethod,
    n: usize,
    k: usize,
    mean_seconds: Option<f64>,
    status: String,
}

pub fn run(
    n_list: &[usize],
    k_list: &[usize],
    methods: &[BenchMethod],
    reps: usize,
    minor_cap: usize,
    format: Format,
) -> Result<Status, Error> {
    if n_list.is_empty() || n_list.contains(&0) {
        return Err(Error::Usage("--n-list needs positive entries".into()));
    }
    if methods.is_empty() {
        return Err(Error::Usage("--methods is empty".into()));
    }
    let reps = reps.max(1);
    let mut rows = Vec::new();
    for &bm in methods {
        let m = method(bm);
        for &n in n_list {
            let ks: Vec<usize> = if k_list.is_empty() {
                vec![n.div_ceil(2)]
            } else {
                k_list.to_vec()
            };
            for k in ks {
                let skip = if k > n {
                    Some("skipped: k > n".to_string())
                } else if m == SymMethod::Minors && n > minor_cap {
                    Some(format!("skipped: n > minor cap {minor_cap}"))
                } else {
                    None
                };
                if let Some(status) = skip {
                    rows.push(Row { method: m, n, k, mean_seconds: None, status });
                    continue;
                }
                let start = Instant::now();
                for _ in 0..reps {
                    let v = match m {
                        SymMethod::Minors => symfun_minor_sum_with_cap(n, k, minor_cap)?,
                        _ => m.eval(n, k)?,
                    };
                    std::hint::black_box(v);
                }
                rows.push(Row {
                    method: m,
                    n,
                    k,
                    mean_seconds: Some(start.elapsed().as_secs_f64() / reps as f64),
                    status: "ok".into(),
                });
            }
        }
    }

    match format {
        Format::Json => print_json(&envelope(
            "bench",
            None,
            json!({
                "reps": reps,
                "rows": rows.iter().map(|r| json!({
                    "method": r.method.name(),
                    "n": r.n,
                    "k": r.k,
                    "mean_seconds": r.mean_seconds,
                    "status": r.status,
                })).collect::<Vec<_>>(),
            }),
        )),
        Format::Csv => {
            println!("method,n,k,reps,mean_seconds,status");
            for r in &rows {
                println!(
                    "{}",
                    csv_row([
                        r.method.name().to_string(),
                        r.n.to_string(),
                        r.k.to_string(),
                        reps.to_string(),
                        r.mean_seconds.map(|s| format!("{s:.9}")).unwrap_or_default(),
                        r.status.clone(),
                    ])
                );
            }
        }
        Format::Plain => {
            for r in &rows {
                match r.mean_seconds {
                    Some(s) => println!("{:<7} n={:<4} k={:<4} {:>12.3} us", r.method, r.n, r.k, s * 1e6),
                    None => println!("{:<7} n={:<4} k={:<4} {}", r.method, r.n, r.k, r.status),
                }
            }
        }
    }
    Ok(Status::Ok)
}
