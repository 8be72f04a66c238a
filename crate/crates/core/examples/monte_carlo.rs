//! Monte Carlo estimates of the codeword error probability next to the
//! analytic values.
//!
//! For Shor's code with the two-error table, the simulated decoder also
//! succeeds on every pattern equivalent to a table entry up to a
//! stabilizer, so its error rate sits below the value computed from the
//! 127 listed patterns. The exhaustive count over all `4^9` patterns gives
//! the decoder's exact error probability.
//!
//! cargo run --release --example monte_carlo [-- TRIALS SEED]

use asymqec::perf::{self, ChannelParams};
use asymqec::verifier::{self, ExtensionPolicy};
use asymqec::{catalog, ErrorProfile};

fn main() -> asymqec::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<u64>().expect("integer argument"));
    let trials = args.next().unwrap_or(1_000_000);
    let seed = args.next().unwrap_or(1);

    let asym = catalog::asym_9_1();
    let profile = ErrorProfile::new(1, 1);
    let table = verifier::build_decode_table(&asym, profile, ExtensionPolicy::None)?;
    println!("{}", asym.label());
    for a in [1.0, 10.0] {
        for rho in [0.01, 0.05, 0.1] {
            let ch = ChannelParams::from_rho_asymmetry(rho, a)?;
            let r = perf::simulate(&asym, &table, &ch, trials, seed)?;
            report(rho, a, r, perf::cwep_asymmetric(9, profile, &ch));
        }
    }

    let shor = catalog::shor_9();
    let table = verifier::build_decode_table(&shor, ErrorProfile::new(1, 0), ExtensionPolicy::TwoError)?;
    let listed = verifier::analyze_extended(&shor)?.pattern_set();
    let all = verifier::corrected_patterns(&shor, &table)?;
    println!(
        "{} two-error table: {} listed patterns, {} corrected in total",
        shor.label(),
        listed.len(),
        all.len()
    );
    for rho in [0.01, 0.05, 0.1] {
        let ch = ChannelParams::from_rho_asymmetry(rho, 3.0)?;
        let r = perf::simulate(&shor, &table, &ch, trials, seed)?;
        println!(
            "  listed patterns only: {}",
            perf::format_probability(perf::cwep_from_pattern_set(9, &listed, &ch)?)
        );
        report(rho, 3.0, r, perf::cwep_from_pattern_set(9, &all, &ch)?);
    }
    Ok(())
}

fn report(rho: f64, a: f64, r: perf::SimulationResult, analytic: f64) {
    let sigma = (analytic * (1.0 - analytic) / r.trials as f64).sqrt();
    println!(
        "  rho={rho:<5} A={a:<3} simulated {} [{}, {}]  analytic {}  ({:+.2} sigma)",
        perf::format_probability(r.pe_hat),
        perf::format_probability(r.ci_lo),
        perf::format_probability(r.ci_hi),
        perf::format_probability(analytic),
        (r.pe_hat - analytic) / sigma
    );
}
