use htk_core::comodule::make_galois;
use htk_core::constructions::{
    check_two_cocycle, klein_sign_cocycle, twisted_group_comodule, GroupTable, TwoCocycle,
};
use htk_core::exactlin::{Field, Scalar};
use htk_core::suite::verify_galois;
use htk_core::torsor::{derive_torsor, left_hopf_coinvariants, theta_formulas};
use htk_core::ydribbon::{check_theta_naturality, mu_action, ribbon_theta};
use proptest::prelude::*;

fn field(prime: bool) -> Field {
    if prime {
        Field::prime(5).unwrap()
    } else {
        Field::Rationals
    }
}

fn nonzero(f: Field, v: i64) -> Scalar {
    let s = f.int(v);
    if s.is_zero() {
        f.one()
    } else {
        s
    }
}

/// `base` multiplied by the coboundary of `weights`: σ(g,h) φ(g) φ(h) / φ(gh).
fn twisted(base: &TwoCocycle, weights: &[i64]) -> TwoCocycle {
    let (g, f) = (base.group().clone(), base.field());
    let n = g.order();
    let phi: Vec<Scalar> = (0..n)
        .map(|i| nonzero(f, weights[i % weights.len()]))
        .collect();
    let values = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let s = base.value(a, b) * &(&phi[a] * &phi[b]);
                    &s * &phi[g.mul(a, b)].inv().unwrap()
                })
                .collect()
        })
        .collect();
    TwoCocycle::new(g, values).unwrap()
}

fn base_cocycle(group: u8, f: Field) -> TwoCocycle {
    match group {
        0 => TwoCocycle::trivial(GroupTable::cyclic(3).unwrap(), f),
        1 => klein_sign_cocycle(f).unwrap(),
        _ => TwoCocycle::trivial(GroupTable::cyclic(4).unwrap(), f),
    }
}

fn weights() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![-4i64..=-1, 1i64..=4], 1..=4)
}

/// Brute force over all triples.
fn satisfies_cocycle_condition(c: &TwoCocycle) -> bool {
    let g = c.group();
    let n = g.order();
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|d| {
                c.value(a, b) * c.value(g.mul(a, b), d) == c.value(b, d) * c.value(a, g.mul(b, d))
            })
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coboundary_twists_pass_the_full_suite(group in 0u8..3, w in weights(), prime: bool) {
        let f = field(prime);
        let c = twisted(&base_cocycle(group, f), &w);
        prop_assert!(check_two_cocycle(&c).passed());
        let d = twisted_group_comodule(&c, f).unwrap();
        let r = verify_galois(&d, None, None).unwrap();
        prop_assert!(r.passed(), "{}", r);
        for label in (1..=15).map(|i| format!("({i})")) {
            prop_assert!(r.get(&label).is_some(), "missing {}", label);
        }
    }

    #[test]
    fn torsor_theta_is_well_defined_and_matches_ribbon_theta(group in 0u8..3, w in weights(), prime: bool) {
        let f = field(prime);
        let d = twisted_group_comodule(&twisted(&base_cocycle(group, f), &w), f).unwrap();
        let g = make_galois(&d).unwrap();
        let (first, second) = theta_formulas(&g);
        prop_assert_eq!(&first, &second);
        let t = derive_torsor(&g).unwrap();
        let m = mu_action(&g).unwrap();
        let (theta, theta_inv) = ribbon_theta(&m).unwrap();
        prop_assert_eq!(&theta, t.theta());
        prop_assert!(theta.compose(&theta_inv).is_identity());
        prop_assert!(theta_inv.compose(&theta).is_identity());
        prop_assert!(check_theta_naturality(&m).unwrap().passed());
        let (basis, report) = left_hopf_coinvariants(&g);
        prop_assert!(report.passed());
        prop_assert_eq!(basis.len(), d.hopf_dim());
    }

    #[test]
    fn cocycle_check_agrees_with_brute_force(raw in prop::collection::vec(prop_oneof![-3i64..=-1, 1i64..=3], 9), prime: bool) {
        let f = field(prime);
        let g = GroupTable::cyclic(3).unwrap();
        let e = g.identity();
        let values = (0..3)
            .map(|a| (0..3).map(|b| if a == e || b == e { f.one() } else { nonzero(f, raw[3 * a + b]) }).collect())
            .collect();
        let c = TwoCocycle::new(g, values).unwrap();
        let report = check_two_cocycle(&c);
        prop_assert_eq!(report.passed(), satisfies_cocycle_condition(&c));
        if !report.passed() {
            prop_assert!(report.failures().any(|v| v.witness.is_some() || v.note.is_some()));
        }
    }
}
