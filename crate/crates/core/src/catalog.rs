//! Built-in codes used as fixtures and baselines.

use crate::stabilizer::StabilizerCode;

/// `[[9,1]]` code correcting one generic error plus one Z error.
pub const ASYM_9_1_ROWS: [&str; 8] = [
    "XZZIZZIIX",
    "IXZIIZZZY",
    "IZXZZIZIY",
    "ZIZXZIIZY",
    "ZZIIXIZZX",
    "ZIZZIXZIX",
    "IIIZZZXZX",
    "ZZIZIZIXY",
];

/// `[[13,1]]` code correcting one generic error plus two Z errors.
pub const ASYM_13_1_ROWS: [&str; 12] = [
    "XZIZZZIZIIIZX",
    "IXZIZZZZZIIIY",
    "ZZXZIIIZZZIIY",
    "IIZXIZIZIZZZY",
    "ZIZZXIZZIIZIX",
    "IZIZZXZIIZZIY",
    "IIZZZIXIZZIZX",
    "ZIIIZZIXZZZIX",
    "ZZZIZIIIXIZZY",
    "IZIIIIZZZXZZX",
    "ZIIZIZZIZIXZY",
    "ZZZIIZZIIZIXX",
];

/// The perfect `[[5,1,3]]` code (cyclic shifts of `XZZXI`).
pub const FIVE_QUBIT_ROWS: [&str; 4] = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"];

/// Shor's `[[9,1,3]]` code.
pub const SHOR_9_ROWS: [&str; 8] = [
    "ZZIIIIIII",
    "IZZIIIIII",
    "IIIZZIIII",
    "IIIIZZIII",
    "IIIIIIZZI",
    "IIIIIIIZZ",
    "XXXXXXIII",
    "IIIXXXXXX",
];

fn build(rows: &[&str], name: &str) -> StabilizerCode {
    StabilizerCode::from_rows(1, rows, Some(name)).expect("catalog rows are well formed")
}

pub fn asym_9_1() -> StabilizerCode {
    build(&ASYM_9_1_ROWS, "ASYM_9_1")
}

pub fn asym_13_1() -> StabilizerCode {
    build(&ASYM_13_1_ROWS, "ASYM_13_1")
}

pub fn five_qubit() -> StabilizerCode {
    build(&FIVE_QUBIT_ROWS, "FIVE_QUBIT")
}

pub fn shor_9() -> StabilizerCode {
    build(&SHOR_9_ROWS, "SHOR_9")
}

pub fn builtin_codes() -> Vec<StabilizerCode> {
    vec![asym_9_1(), asym_13_1(), five_qubit(), shor_9()]
}

/// Case-insensitive lookup by catalog name.
pub fn by_name(name: &str) -> Option<StabilizerCode> {
    builtin_codes()
        .into_iter()
        .find(|c| c.name().is_some_and(|n| n.eq_ignore_ascii_case(name)))
}
