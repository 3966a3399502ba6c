//! The acceptance criteria of the workspace as runnable checks.
//!
//! Each criterion returns a [`Verdict`]; the `acceptance` test target runs
//! them all and prints one line per criterion.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;
use zsl_core::group::{dihedral_group, ElementId, SubsetMask};
use zsl_core::harborth::{
    admits_one_product, extremal_set, harborth_bruteforce, harborth_formula, verify_remark_odd,
    SearchOptions,
};
use zsl_core::lemma::{verify_lemma1, verify_lemma2, verify_lemma3, LemmaOptions};
use zsl_core::product::{product_set, product_set_naive};
use zsl_core::scan::k_subsets;

#[derive(Debug, Clone)]
pub struct Verdict {
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn new(failures: Vec<String>, summary: impl Into<String>) -> Verdict {
        if failures.is_empty() {
            Verdict {
                passed: true,
                detail: summary.into(),
            }
        } else {
            Verdict {
                passed: false,
                detail: failures.join("; "),
            }
        }
    }
}

pub struct Criterion {
    pub id: u32,
    pub title: &'static str,
    pub check: fn() -> Verdict,
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "Harborth constant: search equals closed form",
            check: harborth_reproduction,
        },
        Criterion {
            id: 2,
            title: "extremal sets admit no one-product",
            check: extremal_certificates,
        },
        Criterion {
            id: 3,
            title: "even reflection sets: bound and coset equality",
            check: lemma2_suite,
        },
        Criterion {
            id: 4,
            title: "odd reflection sets: bound and coset-minus-one equality",
            check: lemma3_suite,
        },
        Criterion {
            id: 5,
            title: "sumset covering",
            check: lemma1_suite,
        },
        Criterion {
            id: 6,
            title: "product-set DP against permutation oracle",
            check: oracle_equivalence,
        },
        Criterion {
            id: 7,
            title: "reflection parity invariant",
            check: parity_invariant,
        },
        Criterion {
            id: 8,
            title: "odd n: (n+1)-subsets have a length-n one-product",
            check: remark_odd,
        },
        Criterion {
            id: 9,
            title: "reports identical for jobs=1 and jobs=8",
            check: jobs_determinism,
        },
    ]
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn harborth_reproduction() -> Verdict {
    let mut failures = Vec::new();
    let start = Instant::now();
    let mut values = Vec::new();
    for n in 3..=8u32 {
        let got =
            dihedral_group(n).and_then(|g| harborth_bruteforce(&g, &SearchOptions::default()));
        match (got, harborth_formula(n)) {
            (Ok(c), Ok(f)) if c.value == f => values.push(format!("{n}:{f}")),
            (Ok(c), Ok(f)) => failures.push(format!("n={n}: search {} vs formula {f}", c.value)),
            (Err(e), _) | (_, Err(e)) => failures.push(format!("n={n}: {e}")),
        }
    }
    let core_time = start.elapsed();
    if core_time > Duration::from_secs(300) {
        failures.push(format!("n=3..8 took {core_time:?}, limit 5 min"));
    }

    // stretch tier: a wrong value is fatal, a slow run is only noted
    let start = Instant::now();
    let opts = SearchOptions {
        symmetry: true,
        ..SearchOptions::default()
    };
    for n in [9u32, 10] {
        let got = dihedral_group(n).and_then(|g| harborth_bruteforce(&g, &opts));
        match (got, harborth_formula(n)) {
            (Ok(c), Ok(f)) if c.value == f => values.push(format!("{n}:{f}")),
            (Ok(c), Ok(f)) => failures.push(format!("n={n}: search {} vs formula {f}", c.value)),
            (Err(e), _) | (_, Err(e)) => failures.push(format!("n={n}: {e}")),
        }
    }
    let stretch = start.elapsed();
    let note = if stretch > Duration::from_secs(1800) {
        " (stretch tier over 30 min, non-fatal)"
    } else {
        ""
    };
    Verdict::new(
        failures,
        format!(
            "g = {}; n<=8 in {:.2?}, n=9,10 in {:.2?}{note}",
            values.join(" "),
            core_time,
            stretch
        ),
    )
}

fn extremal_certificates() -> Verdict {
    let mut failures = Vec::new();
    for n in [4u32, 6, 8, 3, 5, 7] {
        let check = || -> Result<(), String> {
            let g = dihedral_group(n).map_err(err)?;
            let set = extremal_set(n).map_err(err)?;
            let expected = if n % 2 == 0 {
                SubsetMask((1u64 << n) - 1).with(ElementId(n as u8))
            } else {
                g.full_mask()
            };
            if set != expected {
                return Err(format!("n={n}: unexpected set {:?}", g.subset_names(set)));
            }
            if admits_one_product(&g, set, g.exponent())
                .map_err(err)?
                .is_some()
            {
                return Err(format!("n={n}: extremal set has a one-product"));
            }
            Ok(())
        };
        if let Err(e) = check() {
            failures.push(e);
        }
    }
    Verdict::new(failures, "n=4,6,8 rotations plus x; n=3,5,7 whole group")
}

fn lemma2_suite() -> Verdict {
    let cases = [
        (6u32, 2u32, 0u64),
        (8, 2, 2),
        (10, 2, 0),
        (12, 2, 3),
        (12, 3, 2),
    ];
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for (n, s, golden) in cases {
        match verify_lemma2(n, s, &LemmaOptions::default()) {
            Ok(r) => {
                seen.push(format!("({n},{s}):{}", r.equality_count));
                if !r.passed
                    || r.equality_count != golden
                    || r.equality_instances.len() as u64 != golden
                {
                    failures.push(format!(
                        "(n={n}, s={s}): equality {} (expected {golden}), violations {}, unclassified {}, family misses {}",
                        r.equality_count,
                        r.bound_violations.len(),
                        r.unclassified.len(),
                        r.family_not_attaining.len()
                    ));
                }
            }
            Err(e) => failures.push(format!("(n={n}, s={s}): {e}")),
        }
    }
    Verdict::new(failures, format!("equality counts {}", seen.join(" ")))
}

fn lemma3_suite() -> Verdict {
    let cases = [(8u32, 1u32), (8, 3), (10, 1), (12, 2)];
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    for (n, s) in cases {
        let expected = if n % (2 * s + 2) == 0 { n as u64 } else { 0 };
        match verify_lemma3(n, s, &LemmaOptions::default()) {
            Ok(r) => {
                seen.push(format!("({n},{s}):{}", r.equality_count));
                if !r.passed || r.equality_count != expected {
                    let first = r
                        .unclassified
                        .first()
                        .map(|a| format!(", e.g. {a:?} attains the bound"))
                        .unwrap_or_default();
                    failures.push(format!(
                        "(n={n}, s={s}): equality {} (expected {expected}), violations {}, unclassified {}, positions missing {:?}{first}",
                        r.equality_count,
                        r.bound_violations.len(),
                        r.unclassified.len(),
                        r.removal_positions_missing
                    ));
                }
            }
            Err(e) => failures.push(format!("(n={n}, s={s}): {e}")),
        }
    }
    Verdict::new(failures, format!("equality counts {}", seen.join(" ")))
}

fn lemma1_suite() -> Verdict {
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for (n, trials) in (1..=8u32)
        .map(|n| (n, 0))
        .chain([(16, 1000), (32, 1000), (64, 1000)])
    {
        match verify_lemma1(n, trials, 0) {
            Ok(r) if r.passed => checked += r.subsets_checked,
            Ok(r) => failures.push(format!("n={n}: {} violations", r.bound_violations.len())),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    Verdict::new(failures, format!("{checked} pairs checked"))
}

fn oracle_equivalence() -> Verdict {
    let mut failures = Vec::new();
    let mut checked = 0u64;
    let mut compare = |n: u32, s: SubsetMask| match dihedral_group(n) {
        Ok(g) => {
            checked += 1;
            match (product_set(&g, s), product_set_naive(&g, s)) {
                (Ok(a), Ok(b)) if a.achieved == b.achieved && a.verify(&g) => {}
                (Ok(_), Ok(_)) => failures.push(format!("D{} {:?}", 2 * n, g.subset_names(s))),
                (Err(e), _) | (_, Err(e)) => failures.push(e.to_string()),
            }
        }
        Err(e) => failures.push(e.to_string()),
    };
    for n in [3u32, 4] {
        for size in 1..=6 {
            for bits in k_subsets(2 * n as usize, size) {
                compare(n, SubsetMask(bits));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..500 {
        let n = rng.random_range(5..=8u32);
        let size = rng.random_range(1..=6usize);
        let mut s = SubsetMask::EMPTY;
        while s.len() < size {
            s = s.with(ElementId(rng.random_range(0..2 * n) as u8));
        }
        compare(n, s);
    }
    failures.truncate(5);
    Verdict::new(failures, format!("{checked} subsets agree"))
}

fn parity_invariant() -> Verdict {
    let mut failures = Vec::new();
    let mut checked = 0u64;
    for n in [4u32, 6] {
        let g = match dihedral_group(n) {
            Ok(g) => g,
            Err(e) => return Verdict::new(vec![e.to_string()], ""),
        };
        for bits in 1u64..1 << n {
            let s = SubsetMask(bits << n);
            let achieved = match product_set(&g, s) {
                Ok(r) => r.achieved,
                Err(e) => return Verdict::new(vec![e.to_string()], ""),
            };
            checked += 1;
            let odd = s.len() % 2 == 1;
            let flags_ok = achieved.iter().all(|e| (e.index() >= n as usize) == odd);
            let mut parities = achieved.iter().map(|e| e.index() % n as usize % 2);
            let first = parities.next();
            let rot_ok = parities.all(|p| Some(p) == first);
            if !(flags_ok && rot_ok) {
                failures.push(format!("D{} {:?}", 2 * n, g.subset_names(s)));
            }
        }
    }
    failures.truncate(5);
    Verdict::new(
        failures,
        format!("{checked} reflection subsets of D8 and D12"),
    )
}

fn remark_odd() -> Verdict {
    let mut failures = Vec::new();
    let mut seen = Vec::new();
    let start = Instant::now();
    for n in [3u32, 5, 7] {
        match verify_remark_odd(n, 1) {
            Ok(r) => {
                seen.push(format!("n={n}:{}", r.subsets_checked));
                if !r.passed {
                    let g = dihedral_group(n).expect("n already validated");
                    let ce = r
                        .counterexample
                        .map(|m| g.subset_names(m).join(","))
                        .unwrap_or_default();
                    failures.push(format!(
                        "n={n}: {{{ce}}} has no one-product subsequence of length {}",
                        r.length
                    ));
                }
            }
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(120) {
        failures.push(format!("took {t:?}, limit 2 min"));
    }
    Verdict::new(
        failures,
        format!("subsets checked {} in {t:.2?}", seen.join(" ")),
    )
}

/// JSON printed by the CLI, with timings removed.
fn cli_json(jobs: &str, args: &[&str]) -> Result<Value, String> {
    let mut argv = vec!["zsl", "--no-cache", "--format", "json", "--jobs", jobs];
    argv.extend_from_slice(args);
    let mut out = Vec::new();
    let mut errs = Vec::new();
    let code = zsl_cli::run(argv, &mut out, &mut errs);
    // exit 3 still prints a full report
    if code != zsl_cli::EXIT_OK && code != zsl_cli::EXIT_VIOLATION {
        return Err(format!(
            "{args:?}: exit {code}: {}",
            String::from_utf8_lossy(&errs)
        ));
    }
    let mut v: Value = serde_json::from_slice(&out).map_err(err)?;
    strip_elapsed(&mut v);
    Ok(v)
}

pub fn strip_elapsed(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_elapsed);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_elapsed),
        _ => {}
    }
}

fn jobs_determinism() -> Verdict {
    let mut runs: Vec<Vec<String>> = vec![vec![
        "verify".into(),
        "theorem".into(),
        "--n-min".into(),
        "3".into(),
        "--n-max".into(),
        "8".into(),
    ]];
    for n in [9, 10] {
        runs.push(vec![
            "harborth".into(),
            "--n".into(),
            n.to_string(),
            "--method".into(),
            "both".into(),
            "--symmetry".into(),
        ]);
    }
    for n in 3..=8 {
        runs.push(vec![
            "harborth".into(),
            "--n".into(),
            n.to_string(),
            "--method".into(),
            "formula".into(),
        ]);
    }
    for (n, s) in [(6, 2), (8, 2), (10, 2), (12, 2), (12, 3)] {
        runs.push(vec![
            "verify".into(),
            "lemma2".into(),
            "--n".into(),
            n.to_string(),
            "--s".into(),
            s.to_string(),
        ]);
    }
    for (n, s) in [(8, 1), (8, 3), (10, 1), (12, 2)] {
        runs.push(vec![
            "verify".into(),
            "lemma3".into(),
            "--n".into(),
            n.to_string(),
            "--s".into(),
            s.to_string(),
        ]);
    }
    let mut failures = Vec::new();
    for args in &runs {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        match (cli_json("1", &args), cli_json("8", &args)) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(_), Ok(_)) => failures.push(format!("{} differs", args.join(" "))),
            (Err(e), _) | (_, Err(e)) => failures.push(e),
        }
    }
    Verdict::new(failures, format!("{} commands compared", runs.len()))
}
