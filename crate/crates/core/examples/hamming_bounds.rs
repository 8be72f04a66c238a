//! Minimum code lengths allowed by the quantum Hamming bound for `t`
//! generic errors versus the generalized bound for one generic error plus
//! `t - 1` Z errors, and the construction requirement `n >= 1 + 4 t~`.
//!
//! cargo run --example hamming_bounds [-- K_MAX T_MAX]

use asymqec::bounds::{self, BoundKind};
use asymqec::ErrorProfile;

fn main() -> asymqec::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer argument"));
    let k_max = args.next().unwrap_or(3);
    let t_max = args.next().unwrap_or(4);

    let ks: Vec<usize> = (1..=k_max).collect();
    let ts: Vec<usize> = (1..=t_max).collect();
    println!("n_min (QHB, GQHB with eg = 1)");
    print!("{}", bounds::render_length_grid(&bounds::length_grid(&ks, &ts)?));

    println!();
    print!(
        "{}",
        bounds::render_construction_grid(&bounds::construction_grid(&[1, 2, 3, 4, 5, 6])?)
    );

    println!();
    let profile = ErrorProfile::new(1, 2);
    let n = bounds::min_n(1, profile, BoundKind::Gqhb)?;
    println!(
        "k = 1, {profile}: n_min = {n}, {} patterns vs {} syndromes",
        bounds::gqhb_rhs(n, profile),
        1u64 << (n - 1)
    );
    Ok(())
}
