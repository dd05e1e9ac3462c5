//! Exit criteria. Run with `cargo test -p cyclic-chroma --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use cyclic_chroma::{
    bounds_cyc, construct, contains, count, decompose, enumerate, epsilon, exists_search,
    forbidden_set, tent, theta_by_search, theta_cyclic, theta_interval, verify, CycleColoring,
    Mode, SearchConfig,
};

const CYC: Mode = Mode::CyclicInterval;
const BIN: &str = env!("CARGO_BIN_EXE_cyclic-chroma");
const GOLDEN_TABLE: &str = include_str!("golden/table_8_oracle_8.csv");

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let took = start.elapsed();
    ensure(took < budget, || {
        format!("took {took:?}, budget {budget:?}")
    })
}

/// Counts colorings by trying all `t^n` sequences against the definitions
/// written out with sets.
fn naive_count(n: usize, t: usize, mode: Mode) -> u64 {
    let is_interval = |s: &BTreeSet<usize>| match (s.first(), s.last()) {
        (Some(lo), Some(hi)) => hi - lo + 1 == s.len(),
        _ => false,
    };
    let mut seq = vec![1usize; n];
    let mut total = 0;
    loop {
        let used: BTreeSet<usize> = seq.iter().copied().collect();
        let ok = used.len() == t
            && (0..n).all(|i| {
                let palette: BTreeSet<usize> = [seq[(i + n - 1) % n], seq[i]].into();
                if palette.len() != 2 {
                    return false;
                }
                let rest: BTreeSet<usize> = (1..=t).filter(|x| !palette.contains(x)).collect();
                match mode {
                    Mode::Interval => is_interval(&palette),
                    Mode::CyclicInterval => is_interval(&palette) || is_interval(&rest),
                }
            });
        if ok {
            total += 1;
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == n {
                return total;
            }
            if seq[k] < t {
                seq[k] += 1;
                break;
            }
            seq[k] = 1;
            k += 1;
        }
    }
}

fn ac1_theorem_by_search() -> Outcome {
    let start = Instant::now();
    for n in 3..=12 {
        for t in 1..=n {
            let found = exists_search(n, t, CYC).map_err(|e| e.to_string())?;
            let formula = contains(n, t).map_err(|e| e.to_string())?;
            ensure(found == formula, || {
                format!("n={n} t={t}: search={found} formula={formula}")
            })?;
        }
    }
    within(start, Duration::from_secs(60))
}

fn ac2_interval_by_search() -> Outcome {
    let start = Instant::now();
    for k in 2..=6 {
        let got = theta_by_search(2 * k, Mode::Interval).unwrap().members;
        let want: Vec<usize> = (2..=k + 1).collect();
        ensure(got == want, || format!("n={}: {got:?} != {want:?}", 2 * k))?;
    }
    for n in (3..=11).step_by(2) {
        let got = theta_by_search(n, Mode::Interval).unwrap().members;
        ensure(got.is_empty(), || {
            format!("n={n}: expected empty, got {got:?}")
        })?;
    }
    within(start, Duration::from_secs(30))
}

fn ac3_constructor() -> Outcome {
    let start = Instant::now();
    for n in 3..=500 {
        for t in 1..=n {
            let feasible = contains(n, t).unwrap();
            let built = construct(n, t).unwrap();
            ensure(built.is_witness() == feasible, || {
                format!(
                    "n={n} t={t}: witness={} feasible={feasible}",
                    built.is_witness()
                )
            })?;
            if let Some(c) = built.witness() {
                ensure(verify(&c, CYC).mode_satisfied, || {
                    format!("n={n} t={t}: {c} fails")
                })?;
            }
        }
        if n % 2 == 0 {
            for t in theta_interval(n).unwrap().members {
                let c = tent(n, t).unwrap();
                ensure(verify(&c, Mode::Interval).mode_satisfied, || {
                    format!("tent n={n} t={t} fails interval check")
                })?;
            }
        }
    }
    within(start, Duration::from_secs(30))
}

fn ac4_spot_values() -> Outcome {
    let expect = [
        (5, vec![3, 5]),
        (6, vec![2, 3, 4, 6]),
        (7, vec![3, 5, 7]),
        (8, vec![2, 3, 4, 5, 6, 8]),
    ];
    for (n, want) in expect {
        let got = theta_cyclic(n).unwrap().members;
        ensure(got == want, || {
            format!("Θ(C({n})) = {got:?}, want {want:?}")
        })?;
    }
    let f = forbidden_set(10).unwrap();
    ensure(f == vec![7, 9], || format!("forbidden_set(10) = {f:?}"))?;
    for n in 3..=100 {
        let b = bounds_cyc(n).unwrap();
        let want = (3 - epsilon(n).unwrap(), n);
        ensure(b == want, || {
            format!("bounds_cyc({n}) = {b:?}, want {want:?}")
        })?;
    }
    Ok(())
}

fn ac5_counts() -> Outcome {
    for (n, t, want) in [(3, 3, 6), (4, 3, 12), (4, 4, 8)] {
        let naive = naive_count(n, t, CYC);
        let got = count(n, t, CYC).unwrap();
        ensure(naive == want && got == want, || {
            format!("count({n},{t}): oracle={got} naive={naive} want={want}")
        })?;
    }
    // wider agreement with the naive enumerator
    for n in 3..=7 {
        for t in 1..=n {
            for mode in [CYC, Mode::Interval] {
                let naive = naive_count(n, t, mode);
                let got = count(n, t, mode).unwrap();
                ensure(naive == got, || {
                    format!("n={n} t={t} {mode}: {got} != naive {naive}")
                })?;
            }
        }
    }
    Ok(())
}

fn all_valid(nmax: usize) -> Vec<CycleColoring> {
    let mut pool = Vec::new();
    for n in 3..=nmax {
        for t in 1..=n {
            pool.extend(enumerate(n, t, &SearchConfig::new(CYC)).unwrap());
        }
    }
    pool
}

fn ac6_decomposition_identity() -> Outcome {
    let mut checked = 0;
    for n in 4..=9 {
        for t in 1..=n {
            for c in enumerate(n, t, &SearchConfig::new(CYC)).unwrap() {
                let d = decompose(&c).map_err(|e| e.to_string())?;
                if d.m < 2 {
                    continue;
                }
                checked += 1;
                ensure(d.psi.len() == 2 * d.m, || {
                    format!("{c}: psi length {}", d.psi.len())
                })?;
                ensure(d.psi_sum() == n + 2 * d.m, || {
                    format!("{c}: Σψ={} but n+2m={}", d.psi_sum(), n + 2 * d.m)
                })?;
                ensure(d.non_horizontal_count() % 2 == 0, || {
                    format!("{c}: {} non-horizontal edges", d.non_horizontal_count())
                })?;
            }
        }
    }
    ensure(checked > 0, || "no coloring with m >= 2 was found".into())
}

fn ac7_symmetries() -> Outcome {
    let pool = all_valid(9);
    let mut rng = StdRng::seed_from_u64(0x5eed_c1c1);
    for _ in 0..1000 {
        let c = pool.choose(&mut rng).unwrap();
        let images = (0..c.t() as i64)
            .map(|d| c.shift_colors(d))
            .chain((0..c.n()).map(|k| c.rotate_edges(k).unwrap()))
            .chain([c.reversed(), c.reflected()]);
        for img in images {
            ensure(verify(&img, CYC).mode_satisfied, || {
                format!("{c} -> {img} invalid")
            })?;
        }
    }
    Ok(())
}

fn cli(args: &[&str], stdin: Option<&str>) -> (i32, String) {
    let mut child = Command::new(BIN)
        .args(args)
        .env_remove("CYCLIC_CHROMA_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn cli");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn ac8_cli_contract() -> Outcome {
    let mut feasible = Vec::new();
    for n in 3..=60 {
        for t in theta_cyclic(n).unwrap().members {
            feasible.push((n, t));
        }
    }
    let mut rng = StdRng::seed_from_u64(8);
    for &(n, t) in feasible.choose_multiple(&mut rng, 50) {
        let (code, record) = cli(&["make", &n.to_string(), &t.to_string()], None);
        ensure(code == 0, || format!("make {n} {t} exited {code}"))?;
        let (code, out) = cli(&["check", "--mode", "cyclic"], Some(&record));
        ensure(code == 0, || {
            format!("check of make {n} {t} exited {code}: {out}")
        })?;
    }
    for n in 3..=12 {
        let (code, out) = cli(&["oracle", &n.to_string(), "--assert-theorem"], None);
        ensure(code == 0, || format!("oracle {n} exited {code}: {out}"))?;
    }
    let (code, out) = cli(
        &["table", "8", "--oracle-upto", "8", "--format", "csv"],
        None,
    );
    ensure(code == 0, || format!("table exited {code}"))?;
    ensure(out == GOLDEN_TABLE, || {
        format!("table output differs from golden:\n{out}")
    })
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "AC1 search equals closed form, n in [3,12]",
            ac1_theorem_by_search,
        ),
        ("AC2 interval sets by search", ac2_interval_by_search),
        (
            "AC3 constructor soundness and totality, n in [3,500]",
            ac3_constructor,
        ),
        ("AC4 spot values and bounds", ac4_spot_values),
        ("AC5 counts against naive enumeration", ac5_counts),
        (
            "AC6 decomposition identity, n in [4,9]",
            ac6_decomposition_identity,
        ),
        ("AC7 symmetry suite, 1000 samples", ac7_symmetries),
        ("AC8 CLI contract", ac8_cli_contract),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome =
            std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(()) => println!("PASS  {name}  ({:.2?})", start.elapsed()),
            Err(why) => {
                println!("FAIL  {name}: {why}");
                failed.push(name);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
