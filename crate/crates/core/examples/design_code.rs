//! Builds an `[[n,1]]` code correcting one generic error and `ez` Z errors
//! by random syndrome assignment, then certifies it.
//!
//! cargo run --release --example design_code [-- N EZ SEED]

use asymqec::designer::{self, SearchConfig};
use asymqec::stabilizer::serialize_code;
use asymqec::{verifier, ErrorProfile};

fn main() -> asymqec::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let n = args.first().copied().unwrap_or(9) as usize;
    let ez = args.get(1).copied().unwrap_or(1) as usize;
    let seed = args.get(2).copied().unwrap_or(7);

    let profile = ErrorProfile::new(1, ez);
    let mut config = SearchConfig::new(n, profile, seed);
    config.jobs = std::thread::available_parallelism().map_or(1, |p| p.get());
    let outcome = designer::search(config)?;

    print!("{}", serialize_code(&outcome.code));
    let s = &outcome.stats;
    println!(
        "restarts={} (exhausted {}, non-commuting {}, unverified {}) elapsed_ms={}",
        s.restarts, s.exhausted, s.non_commuting, s.unverified, s.elapsed_ms
    );

    println!("X syndromes (s_{}..s_1):", n - 1);
    for q in 0..n {
        let x = outcome.assignment.x_syndrome(q).expect("complete assignment");
        println!("  X{:<3} {x}  (weight {})", q + 1, x.weight());
    }

    let report = verifier::verify_capability(&outcome.code, profile);
    println!("{} patterns, distinct: {}", report.pattern_count, report.distinct);
    Ok(())
}
