//! Extends the single-error lookup table of Shor's nine-qubit code with
//! two-error patterns and reports how many of each class it corrects,
//! together with the resulting codeword error probability.
//!
//! cargo run --example shor_extended

use asymqec::perf::{self, ChannelParams};
use asymqec::{catalog, verifier};

fn main() -> asymqec::Result<()> {
    let code = catalog::shor_9();
    let analysis = verifier::analyze_extended(&code)?;

    println!("{}", code.label());
    for c in &analysis.classes {
        println!(
            "  {:<7} {:>3}/{:<3} corrected ({} decoded exactly)",
            c.class.label(),
            c.correctable,
            c.total,
            c.raw
        );
    }

    let set = analysis.pattern_set();
    println!("  correctable patterns: {}", set.len());
    println!();
    println!("{:>8} {:>4} {:>14}", "rho", "A", "P_e");
    for a in [1.0, 3.0, 10.0] {
        for rho in [0.01, 0.05, 0.1] {
            let ch = ChannelParams::from_rho_asymmetry(rho, a)?;
            let pe = perf::cwep_from_pattern_set(code.n(), &set, &ch)?;
            println!("{rho:>8} {a:>4} {:>14}", perf::format_probability(pe));
        }
    }
    Ok(())
}
