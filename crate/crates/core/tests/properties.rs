use std::collections::HashSet;

use proptest::prelude::*;

use asymqec::bits::BitVector;
use asymqec::bounds::{self, enumerate_correctable};
use asymqec::pauli::{gf2_rank, SymplecticMatrix};
use asymqec::stabilizer::{parse_code, serialize_code};
use asymqec::{catalog, ErrorProfile, Pauli, PauliOperator, StabilizerCode};

fn pauli_string(n: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(prop_oneof![Just('I'), Just('X'), Just('Y'), Just('Z')], n)
        .prop_map(|v| v.into_iter().collect())
}

fn op(n: usize) -> impl Strategy<Value = PauliOperator> {
    pauli_string(n).prop_map(|s| s.parse().unwrap())
}

fn triple() -> impl Strategy<Value = (PauliOperator, PauliOperator, PauliOperator)> {
    (1usize..130).prop_flat_map(|n| (op(n), op(n), op(n)))
}

/// Symplectic form straight from the single-qubit table: two factors
/// anticommute iff both are non-identity and differ.
fn anticommute_by_symbols(a: &str, b: &str) -> bool {
    a.chars()
        .zip(b.chars())
        .filter(|&(p, q)| p != 'I' && q != 'I' && p != q)
        .count()
        % 2
        == 1
}

proptest! {
    #[test]
    fn symplectic_form_matches_symbol_table((a, b, _) in triple()) {
        prop_assert_eq!(
            a.symplectic_form(&b).unwrap(),
            anticommute_by_symbols(&a.to_string(), &b.to_string())
        );
    }

    #[test]
    fn symplectic_form_is_bilinear_symmetric_alternating((a, b, c) in triple()) {
        let bc = b.compose(&c).unwrap();
        prop_assert_eq!(
            a.symplectic_form(&bc).unwrap(),
            a.symplectic_form(&b).unwrap() ^ a.symplectic_form(&c).unwrap()
        );
        prop_assert_eq!(a.symplectic_form(&b).unwrap(), b.symplectic_form(&a).unwrap());
        prop_assert!(!a.symplectic_form(&a).unwrap());
        prop_assert_eq!(a.commutes(&b).unwrap(), !a.symplectic_form(&b).unwrap());
    }

    #[test]
    fn compose_is_an_abelian_group_law((a, b, c) in triple()) {
        let n = a.n();
        prop_assert_eq!(a.compose(&b).unwrap(), b.compose(&a).unwrap());
        prop_assert_eq!(
            a.compose(&b).unwrap().compose(&c).unwrap(),
            a.compose(&b.compose(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.compose(&PauliOperator::identity(n)).unwrap(), a.clone());
        prop_assert!(a.compose(&a).unwrap().is_identity());
        prop_assert!(a.compose(&b).unwrap().weight() <= a.weight() + b.weight());
    }

    #[test]
    fn weight_and_type_counts_agree((a, _, _) in triple()) {
        let s = a.to_string();
        let (x, y, z) = a.type_counts();
        prop_assert_eq!(x, s.matches('X').count());
        prop_assert_eq!(y, s.matches('Y').count());
        prop_assert_eq!(z, s.matches('Z').count());
        prop_assert_eq!(a.weight(), s.len() - s.matches('I').count());
    }

    #[test]
    fn display_parse_round_trip(s in (1usize..100).prop_flat_map(pauli_string)) {
        let p: PauliOperator = s.parse().unwrap();
        prop_assert_eq!(p.to_string(), s);
    }

    #[test]
    fn row_space_membership_matches_brute_force(
        (rows, candidate) in (1usize..7, 1usize..7).prop_flat_map(|(n, r)| {
            (proptest::collection::vec(op(n), r), op(n))
        })
    ) {
        let n = candidate.n();
        let m = SymplecticMatrix::new(n, rows.clone()).unwrap();
        let mut span = HashSet::new();
        for mask in 0u32..1 << rows.len() {
            let mut acc = PauliOperator::identity(n);
            for (i, row) in rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    acc = acc.compose(row).unwrap();
                }
            }
            span.insert(acc);
        }
        prop_assert_eq!(m.in_row_space(&candidate).unwrap(), span.contains(&candidate));
        // |span| = 2^rank
        prop_assert_eq!(span.len(), 1usize << m.rank());
        prop_assert_eq!(gf2_rank(&m), m.rank());
        prop_assert!(m.rank() <= rows.len().min(2 * n));
    }

    #[test]
    fn rank_ignores_redundant_rows(
        rows in (1usize..40, 1usize..8).prop_flat_map(|(n, r)| proptest::collection::vec(op(n), r))
    ) {
        let n = rows[0].n();
        let base = SymplecticMatrix::new(n, rows.clone()).unwrap().rank();
        let mut extended = rows.clone();
        extended.push(rows[0].compose(rows.last().unwrap()).unwrap());
        extended.reverse();
        prop_assert_eq!(SymplecticMatrix::new(n, extended).unwrap().rank(), base);
    }

    #[test]
    fn syndromes_are_additive(
        (code_index, a, b) in (0usize..4).prop_flat_map(|i| {
            let n = catalog::builtin_codes()[i].n();
            (Just(i), op(n), op(n))
        })
    ) {
        let code = &catalog::builtin_codes()[code_index];
        prop_assert!(code.syndrome_additivity_check(&a, &b).unwrap());
        let s = code.syndrome(&a).unwrap();
        for (j, g) in code.generators().iter().enumerate() {
            prop_assert_eq!(s.bit(j), !a.commutes(g).unwrap());
        }
    }

    #[test]
    fn bit_vector_dot_is_parity_of_and(
        (a, b) in (1usize..200).prop_flat_map(|n| {
            (proptest::collection::vec(any::<bool>(), n), proptest::collection::vec(any::<bool>(), n))
        })
    ) {
        let va = BitVector::from_bools(a.iter().copied());
        let vb = BitVector::from_bools(b.iter().copied());
        let expected = a.iter().zip(&b).filter(|(x, y)| **x && **y).count() % 2 == 1;
        prop_assert_eq!(va.dot(&vb), expected);
        prop_assert_eq!(va.xor(&vb).count_ones(), a.iter().zip(&b).filter(|(x, y)| x != y).count());
    }
}

#[test]
fn g_and_f_counts_match_symbol_enumeration() {
    for j in 0..=6usize {
        let total = 3u64.pow(j as u32);
        for eg in 0..=j {
            // Strings over {X, Y, Z} with at most eg symbols from {X, Y}.
            let mut generic_ok = 0u64;
            for code in 0..total {
                let mut c = code;
                let mut generic = 0;
                for _ in 0..j {
                    if c % 3 != 2 {
                        generic += 1;
                    }
                    c /= 3;
                }
                if generic <= eg {
                    generic_ok += 1;
                }
            }
            assert_eq!(bounds::g_count(j, eg), generic_ok.into(), "g({j};{eg})");
            if j > eg {
                assert_eq!(bounds::f_count(j, eg) + bounds::g_count(j, eg), total.into());
            }
        }
    }
}

fn admissible(p: &PauliOperator, profile: ErrorProfile) -> bool {
    let (x, y, _) = p.type_counts();
    x + y <= profile.eg && p.weight() <= profile.t_tilde()
}

#[test]
fn enumeration_equals_filter_over_all_patterns() {
    for n in 1..=6usize {
        for eg in 0..=2 {
            for ez in 0..=2 {
                let profile = ErrorProfile::new(eg, ez);
                let listed: Vec<_> = enumerate_correctable(n, profile).collect();
                let set: HashSet<_> = listed.iter().cloned().collect();
                assert_eq!(set.len(), listed.len());
                let mut expected = HashSet::new();
                for index in 0..1usize << (2 * n) {
                    let p = PauliOperator::from_sparse(
                        n,
                        (0..n).map(|q| (q, [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z][index >> (2 * q) & 3])),
                    );
                    if admissible(&p, profile) {
                        expected.insert(p);
                    }
                }
                assert_eq!(set, expected, "n={n} {profile}");
            }
        }
    }
}

#[test]
fn enumeration_counts_match_bound_up_to_thirteen_qubits() {
    for n in 1..=13usize {
        for t in 0..=3usize {
            for eg in 0..=t {
                let profile = ErrorProfile::new(eg, t - eg);
                let mut seen = HashSet::new();
                for p in enumerate_correctable(n, profile) {
                    assert!(admissible(&p, profile));
                    assert!(seen.insert(p));
                }
                assert_eq!(bounds::gqhb_rhs(n, profile), seen.len().into(), "n={n} {profile}");
            }
        }
    }
}

#[test]
fn symmetric_profile_count_is_qhb() {
    for n in 1..=15 {
        for t in 0..=3 {
            assert_eq!(bounds::gqhb_rhs(n, ErrorProfile::symmetric(t)), bounds::qhb_rhs(n, t));
        }
    }
}

#[test]
fn catalog_round_trips_through_text_format() {
    for code in catalog::builtin_codes() {
        let text = serialize_code(&code);
        let back: StabilizerCode = parse_code(&text).unwrap();
        assert_eq!(back, code);
        assert_eq!(serialize_code(&back), text);
    }
}

#[test]
fn capability_is_monotone_on_builtins() {
    let profiles: Vec<ErrorProfile> = (0..=1)
        .flat_map(|eg| (0..=2).map(move |ez| ErrorProfile::new(eg, ez)))
        .collect();
    for code in catalog::builtin_codes() {
        for &p in &profiles {
            if !asymqec::verifier::verify_capability(&code, p).distinct {
                continue;
            }
            for &q in &profiles {
                if q.eg <= p.eg && q.t_tilde() <= p.t_tilde() {
                    assert!(
                        asymqec::verifier::verify_capability(&code, q).distinct,
                        "{} {p} -> {q}",
                        code.label()
                    );
                }
            }
        }
    }
}
