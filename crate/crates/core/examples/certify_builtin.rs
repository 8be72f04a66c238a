//! Checks every built-in code against a few correction profiles.
//!
//! cargo run --release --example certify_builtin

use asymqec::{catalog, verifier, ErrorProfile};

fn main() {
    let profiles = [
        ErrorProfile::new(1, 0),
        ErrorProfile::new(1, 1),
        ErrorProfile::new(1, 2),
    ];
    for code in catalog::builtin_codes() {
        let v = code.validate();
        println!(
            "{}: commuting {}, rank {}/{}",
            code.label(),
            v.non_commuting.is_empty(),
            v.rank,
            v.expected_rank
        );
        for p in profiles {
            if p.t_tilde() > code.n() {
                continue;
            }
            let r = verifier::verify_capability(&code, p);
            let verdict = match &r.first_collision {
                None => "all syndromes distinct".to_string(),
                Some((a, b)) => format!("{a} and {b} collide"),
            };
            println!("  {p}: {} patterns, {verdict}", r.pattern_count);
        }
    }
}
