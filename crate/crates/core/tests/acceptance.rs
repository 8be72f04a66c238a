//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use asymqec::bounds::{self, enumerate_correctable};
use asymqec::designer::{self, SearchConfig, SyndromeAssignment};
use asymqec::perf::{self, ChannelParams};
use asymqec::stabilizer::{parse_code, serialize_code};
use asymqec::verifier::{self, ExtensionPolicy, TwoErrorClass};
use asymqec::{catalog, ErrorProfile, PauliOperator, StabilizerCode, Syndrome};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn cli(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_asymqec"))
        .args(args)
        .env_remove("ASYMQEC_SEED")
        .output()
        .expect("binary runs");
    (out.status.code(), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn channel(rho: f64, a: f64) -> ChannelParams {
    ChannelParams::from_rho_asymmetry(rho, a).unwrap()
}

/// Minimum lengths (QHB, GQHB) for k = 1..3 and t = 1..4.
const LENGTH_TABLE: [[(usize, usize); 4]; 3] = [
    [(5, 5), (10, 9), (15, 12), (20, 15)],
    [(7, 7), (12, 10), (16, 14), (21, 17)],
    [(8, 8), (13, 12), (18, 15), (23, 19)],
];

fn bound_tables() -> Outcome {
    let start = Instant::now();
    let cells = bounds::length_grid(&[1, 2, 3], &[1, 2, 3, 4]).unwrap();
    let construction = bounds::construction_grid(&[1, 2, 3, 4, 5, 6]).unwrap();
    let elapsed = start.elapsed();

    let mut mismatches = Vec::new();
    for c in &cells {
        let expected = LENGTH_TABLE[c.k - 1][c.t - 1];
        if (c.n_min_qhb, c.n_min_gqhb) != expected {
            mismatches.push(format!(
                "k={} t={}: {},{} vs {},{}",
                c.k, c.t, c.n_min_qhb, c.n_min_gqhb, expected.0, expected.1
            ));
        }
    }
    let gqhb: Vec<usize> = construction.iter().map(|c| c.n_min_gqhb).collect();
    let rule: Vec<usize> = construction.iter().map(|c| c.n_min_construction).collect();
    if gqhb != [5, 9, 12, 15, 18, 21] || rule != [5, 9, 13, 17, 21, 25] {
        mismatches.push(format!("construction table {gqhb:?} / {rule:?}"));
    }

    let (code1, table1) = cli(&["bound", "--paper-table", "1"]);
    for (k, row) in LENGTH_TABLE.iter().enumerate() {
        let line = table1.lines().find(|l| l.starts_with(&format!("k = {}", k + 1)));
        let cells: Vec<String> = row.iter().map(|(a, b)| format!("{a},{b}")).collect();
        let printed: Vec<&str> = line.map(|l| l.split_whitespace().skip(3).collect()).unwrap_or_default();
        if printed != cells {
            mismatches.push(format!("printed row k={}: {printed:?}", k + 1));
        }
    }
    let (code5, table5) = cli(&["bound", "--paper-table", "5"]);
    if !table5.contains("GQHB: 5 9 12 15 18 21\n") || !table5.contains("1+4t~: 5 9 13 17 21 25\n") {
        mismatches.push("printed construction table".into());
    }
    if code1 != Some(0) || code5 != Some(0) {
        mismatches.push("non-zero exit".into());
    }
    let fast = elapsed < Duration::from_secs(1);
    outcome(
        mismatches.is_empty() && fast,
        if mismatches.is_empty() {
            format!("12 length cells and 12 construction cells match, {elapsed:?}")
        } else {
            mismatches.join("; ")
        },
    )
}

fn counting_oracle() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    for j in 0..=6usize {
        let total = 3u64.pow(j as u32);
        for eg in 0..=j {
            let brute = (0..total)
                .filter(|&s| {
                    let mut s = s;
                    let mut generic = 0;
                    for _ in 0..j {
                        generic += usize::from(s % 3 != 0);
                        s /= 3;
                    }
                    generic <= eg
                })
                .count() as u64;
            if bounds::g_count(j, eg) != brute.into() {
                bad.push(format!("g({j};{eg})"));
            }
            if j > eg && bounds::f_count(j, eg) + bounds::g_count(j, eg) != total.into() {
                bad.push(format!("f+g({j};{eg})"));
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < Duration::from_secs(1),
        if bad.is_empty() {
            format!("{checked} (j, eg) pairs exact, {elapsed:?}")
        } else {
            bad.join(", ")
        },
    )
}

fn certification() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut pass = true;
    for (code, profile, expected) in [
        (catalog::asym_9_1(), ErrorProfile::new(1, 1), 208),
        (catalog::asym_13_1(), ErrorProfile::new(1, 2), 2432),
    ] {
        let valid = code.validate().is_valid();
        let r = verifier::verify_capability(&code, profile);
        let ok = valid && r.distinct && r.pattern_count == expected;
        pass &= ok;
        notes.push(format!(
            "{}: valid={valid} {} distinct={}",
            code.label(),
            r.pattern_count,
            r.distinct
        ));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(5);
    notes.push(format!("{elapsed:?}"));
    outcome(pass, notes.join(", "))
}

/// Table II (Z syndromes) and Table III (X syndromes), `s_8 ... s_1`.
const TABLE_II: [&str; 9] = [
    "00000001", "00000010", "00000100", "00001000", "00010000", "00100000", "01000000", "10000000", "11111111",
];
const TABLE_III: [&str; 9] = [
    "10111000", "10010101", "00101011", "11100100", "01001101", "11000011", "00110110", "01011010", "10001110",
];
const TABLE_IV: [&str; 8] = [
    "XZZIZZIIX",
    "IXZIIZZZY",
    "IZXZZIZIY",
    "ZIZXZIIZY",
    "ZZIIXIZZX",
    "ZIZZIXZIX",
    "IIIZZZXZX",
    "ZZIZIZIXY",
];

fn syndrome(s: &str) -> Syndrome {
    Syndrome::from_u64(s.len(), u64::from_str_radix(s, 2).unwrap())
}

fn construction_rule() -> Outcome {
    let a = SyndromeAssignment::from_tables(
        TABLE_II.iter().map(|s| syndrome(s)).collect(),
        TABLE_III.iter().map(|s| syndrome(s)).collect(),
    )
    .unwrap();
    let code = designer::stabilizer_from_syndromes(&a).unwrap();
    let rows: Vec<String> = code.generators().iter().map(PauliOperator::to_string).collect();
    let diffs: Vec<String> = rows
        .iter()
        .zip(TABLE_IV)
        .enumerate()
        .filter(|(_, (got, want))| got.as_str() != *want)
        .map(|(i, (got, want))| format!("G{}: {got} vs {want}", i + 1))
        .collect();
    outcome(
        diffs.is_empty() && rows.len() == 8,
        if diffs.is_empty() {
            "8 generators match character for character".into()
        } else {
            diffs.join("; ")
        },
    )
}

fn search_end_to_end() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut pass = true;

    let path = std::env::temp_dir().join(format!("asymqec-acceptance-{}.stab", std::process::id()));
    let (code, _) = cli(&[
        "search",
        "--n",
        "9",
        "--eg",
        "1",
        "--ez",
        "1",
        "--seed",
        "7",
        "-o",
        path.to_str().unwrap(),
    ]);
    let (verify_code, report) = cli(&["verify", "--code", path.to_str().unwrap(), "--eg", "1", "--ez", "1"]);
    std::fs::remove_file(&path).ok();
    let certified =
        code == Some(0) && verify_code == Some(0) && report.contains("208 patterns, all syndromes distinct");
    pass &= certified;
    notes.push(format!("seed 7 certified={certified}"));

    let mut restarts = Vec::new();
    for seed in 0..200u64 {
        match designer::search(SearchConfig::new(9, ErrorProfile::new(1, 1), seed)) {
            Ok(o) => restarts.push(o.stats.restarts),
            Err(e) => {
                pass = false;
                notes.push(format!("seed {seed}: {e}"));
            }
        }
    }
    let mean = restarts.iter().sum::<u64>() as f64 / restarts.len().max(1) as f64;
    let nine_elapsed = start.elapsed();
    pass &= (5.0..=80.0).contains(&mean) && nine_elapsed < Duration::from_secs(60);
    notes.push(format!(
        "n=9 mean restarts {mean:.2} over {} seeds (max {}), {nine_elapsed:?}",
        restarts.len(),
        restarts.iter().max().unwrap_or(&0)
    ));

    let start13 = Instant::now();
    let mut found = None;
    for seed in 0..5u64 {
        let mut config = SearchConfig::new(13, ErrorProfile::new(1, 2), seed);
        config.max_restarts = 1_000_000;
        config.jobs = std::thread::available_parallelism().map_or(1, |p| p.get());
        if let Ok(o) = designer::search(config) {
            if verifier::verify_capability(&o.code, ErrorProfile::new(1, 2)).distinct
                && start13.elapsed() < Duration::from_secs(600)
            {
                found = Some((seed, o.stats.restarts));
                break;
            }
        }
        if start13.elapsed() >= Duration::from_secs(600) {
            break;
        }
    }
    pass &= found.is_some();
    notes.push(match found {
        Some((seed, r)) => format!("n=13 seed {seed} after {r} restarts, {:?}", start13.elapsed()),
        None => "n=13 no code from 5 seeds".into(),
    });
    outcome(pass, notes.join("; "))
}

fn analytic_points() -> Outcome {
    let points: [(&str, f64, f64); 6] = [
        ("[[5,1]] t=1 rho=0.1", perf::cwep_symmetric(5, 1, 0.1), 0.08146),
        (
            "[[11,1]] t=2 rho=0.01",
            perf::cwep_symmetric(11, 2, 0.01),
            1.55372629155e-4,
        ),
        (
            "[[9,1]] rho=0.1 A=1",
            perf::cwep_asymmetric(9, ErrorProfile::new(1, 1), &channel(0.1, 1.0)),
            0.129499642,
        ),
        (
            "[[9,1]] rho=0.1 A=10",
            perf::cwep_asymmetric(9, ErrorProfile::new(1, 1), &channel(0.1, 10.0)),
            0.0577551070,
        ),
        (
            "[[13,1]] rho=0.01 A=10",
            perf::cwep_asymmetric(13, ErrorProfile::new(1, 2), &channel(0.01, 10.0)),
            2.07826789506e-4,
        ),
        (
            "CSS15 rho=0.1 A=1",
            perf::cwep_css_15(&channel(0.1, 1.0)),
            0.229174247948,
        ),
    ];
    let mut failed = Vec::new();
    for (label, got, want) in points {
        let e = rel(got, want);
        if e > 1e-9 {
            failed.push(format!("{label}: {got:.12e} vs {want:.12e} (rel {e:.2e})"));
        }
    }
    outcome(
        failed.is_empty(),
        if failed.is_empty() {
            "6 points within 1e-9".into()
        } else {
            format!("{} of 6 points off: {}", failed.len(), failed.join("; "))
        },
    )
}

fn formula_consistency() -> Outcome {
    let rhos = [1e-3, 1e-2, 0.05, 0.1];
    let mut notes = Vec::new();
    let mut pass = true;
    for (n, profile) in [(9, ErrorProfile::new(1, 1)), (13, ErrorProfile::new(1, 2))] {
        let mut worst: f64 = 0.0;
        for rho in rhos {
            for a in [1.0, 3.0, 10.0, 100.0] {
                let general = perf::cwep_asymmetric(n, profile, &channel(rho, a));
                let closed = perf::cwep_asymmetric_closed_form(n, profile, rho, a).unwrap();
                worst = worst.max(rel(closed, general));
            }
        }
        let mut worst_limit: f64 = 0.0;
        for rho in rhos {
            let z = ChannelParams::z_only(rho).unwrap();
            worst_limit = worst_limit.max(rel(
                perf::cwep_asymmetric(n, profile, &z),
                perf::cwep_symmetric(n, profile.t_tilde(), rho),
            ));
        }
        pass &= worst <= 1e-12 && worst_limit <= 1e-12;
        notes.push(format!(
            "n={n} {profile}: closed form max rel {worst:.2e}, A->inf max rel {worst_limit:.2e}"
        ));
    }
    outcome(pass, notes.join("; "))
}

fn shor_extended() -> Outcome {
    let code = catalog::shor_9();
    let analysis = verifier::analyze_extended(&code).unwrap();
    let expected = [
        (TwoErrorClass::ZZ, 9, 36),
        (TwoErrorClass::XZ, 72, 72),
        (TwoErrorClass::YZ, 18, 72),
    ];
    let mut pass = true;
    let mut counts = Vec::new();
    for (class, want, total) in expected {
        let c = analysis.class(class);
        pass &= c.correctable == want && c.total == total;
        counts.push(format!(
            "{} {}/{} (raw {})",
            class.label(),
            c.correctable,
            c.total,
            c.raw
        ));
    }
    let set = analysis.pattern_set();
    let mut worst: f64 = 0.0;
    for (rho, a, want) in [(0.1, 3.0, 0.15800613724), (0.05, 3.0, 0.0466997571)] {
        let got = perf::cwep_from_pattern_set(9, &set, &channel(rho, a)).unwrap();
        worst = worst.max(rel(got, want));
    }
    pass &= worst <= 1e-9;
    outcome(pass, format!("{}; C_SE points max rel {worst:.2e}", counts.join(", ")))
}

fn monte_carlo() -> Outcome {
    let code = catalog::asym_9_1();
    let table = verifier::build_decode_table(&code, ErrorProfile::new(1, 1), ExtensionPolicy::None).unwrap();
    let ch = channel(0.05, 10.0);
    let analytic = 0.0101068827871;
    let start = Instant::now();
    let first = perf::simulate(&code, &table, &ch, 1_000_000, 20_240_601).unwrap();
    let elapsed = start.elapsed();
    let second = perf::simulate(&code, &table, &ch, 1_000_000, 20_240_601).unwrap();
    let (lo, hi) = perf::wilson_interval(first.failures, first.trials, 3.0);
    let inside = lo <= analytic && analytic <= hi;
    let identical = first == second && first.pe_hat.to_bits() == second.pe_hat.to_bits();
    outcome(
        inside && identical && elapsed < Duration::from_secs(30),
        format!(
            "p_hat {} in [{}, {}] (3 sigma) = {inside}, rerun identical = {identical}, {elapsed:?}",
            perf::format_probability(first.pe_hat),
            perf::format_probability(lo),
            perf::format_probability(hi)
        ),
    )
}

fn property_suites() -> Outcome {
    let mut failures = 0usize;
    let mut pairs = 0usize;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let random_op = |rng: &mut ChaCha8Rng, n: usize| -> PauliOperator {
        (0..n)
            .map(|_| ['I', 'X', 'Y', 'Z'][rng.random_range(0..4)])
            .collect::<String>()
            .parse()
            .unwrap()
    };
    for code in catalog::builtin_codes() {
        for _ in 0..1000 {
            let (a, b) = (random_op(&mut rng, code.n()), random_op(&mut rng, code.n()));
            pairs += 1;
            failures += usize::from(!code.syndrome_additivity_check(&a, &b).unwrap());
        }
    }

    let mut round_trips = 0;
    for code in catalog::builtin_codes() {
        let back: StabilizerCode = parse_code(&serialize_code(&code)).unwrap();
        failures += usize::from(back != code);
        round_trips += 1;
    }

    let mut decoded = 0;
    for (code, profile) in [
        (catalog::asym_9_1(), ErrorProfile::new(1, 1)),
        (catalog::asym_13_1(), ErrorProfile::new(1, 2)),
        (catalog::five_qubit(), ErrorProfile::new(1, 0)),
    ] {
        let table = verifier::build_decode_table(&code, profile, ExtensionPolicy::None).unwrap();
        let stabilizers = code.stabilizer_space();
        for e in enumerate_correctable(code.n(), profile) {
            decoded += 1;
            failures += usize::from(!table.corrects(&code, &stabilizers, &e).unwrap());
        }
    }
    outcome(
        failures == 0,
        format!("{pairs} additivity pairs, {round_trips} round trips, {decoded} decode residuals; {failures} failures"),
    )
}

type Check = fn() -> Outcome;

fn main() {
    let criteria: [(&str, Check); 10] = [
        ("bound tables", bound_tables),
        ("counting oracle", counting_oracle),
        ("embedded-code certification", certification),
        ("construction rule fidelity", construction_rule),
        ("search end-to-end", search_end_to_end),
        ("analytic CWEP points", analytic_points),
        ("formula consistency", formula_consistency),
        ("Shor-extended analysis", shor_extended),
        ("Monte Carlo validation", monte_carlo),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        failed += usize::from(!o.pass);
        println!(
            "criterion {:>2} {name}: {} ({})",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
