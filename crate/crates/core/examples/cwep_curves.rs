//! Codeword error probability curves on a log grid, as CSV: a symmetric
//! `[[5,1]]` code, the `[[9,1]]` and `[[13,1]]` asymmetric codes for several
//! asymmetries, and the 15-qubit CSS code.
//!
//! cargo run --example cwep_curves > curves.csv

use asymqec::perf::{self, ChannelParams, CwepCurve};
use asymqec::ErrorProfile;

fn main() -> asymqec::Result<()> {
    let rhos = perf::log_grid(1e-3, 0.1, 9)?;
    let mut curves = vec![CwepCurve::evaluate("[[5,1]] t=1", None, &rhos, |rho| {
        Ok(perf::cwep_symmetric(5, 1, rho))
    })?];
    for a in [1.0, 3.0, 10.0] {
        let ch = |rho| ChannelParams::from_rho_asymmetry(rho, a);
        curves.push(CwepCurve::evaluate("[[9,1]] (1,1)", Some(a), &rhos, |rho| {
            Ok(perf::cwep_asymmetric(9, ErrorProfile::new(1, 1), &ch(rho)?))
        })?);
        curves.push(CwepCurve::evaluate("[[13,1]] (1,2)", Some(a), &rhos, |rho| {
            Ok(perf::cwep_asymmetric(13, ErrorProfile::new(1, 2), &ch(rho)?))
        })?);
        curves.push(CwepCurve::evaluate("[[15,1]] CSS", Some(a), &rhos, |rho| {
            Ok(perf::cwep_css_15(&ch(rho)?))
        })?);
    }

    println!("code,A,rho,pe");
    for c in &curves {
        let a = c.asymmetry.map_or(String::new(), |a| a.to_string());
        for (rho, pe) in &c.points {
            println!("\"{}\",{a},{rho},{}", c.label, perf::format_probability(*pe));
        }
    }
    Ok(())
}
