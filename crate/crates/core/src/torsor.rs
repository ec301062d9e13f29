//! Quantum torsors `(T, μ, θ)`, the torsor attached to a Galois object, and the
//! identities relating the two structures.
//!
//! `μ : T -> T⊗T^op⊗T` and `θ : T -> T` are stored as plain matrices; the middle
//! factor of `μ` only matters for the multiplicativity check.

use crate::comodule::GaloisObjectData;
use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, rank, spans_contain, LinMap, Slot, Vector};
use crate::hopfcore::{tensor_product_mul, tensor_unit, AlgebraData};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq)]
pub struct TorsorData {
    pub algebra: AlgebraData,
    mu: LinMap,
    theta: LinMap,
}

impl TorsorData {
    pub fn new(algebra: AlgebraData, mu: LinMap, theta: LinMap) -> Result<Self> {
        let n = algebra.dim();
        for (what, m, cod) in [("μ", &mu, n * n * n), ("θ", &theta, n)] {
            if m.field() != algebra.field() {
                return Err(Error::FieldMismatch);
            }
            if m.dom_dim() != n || m.cod_dim() != cod {
                return Err(Error::DimensionMismatch {
                    context: format!("{what} shape"),
                    expected: cod * n,
                    actual: m.cod_dim() * m.dom_dim(),
                });
            }
        }
        Ok(TorsorData { algebra, mu, theta })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mu(&self) -> &LinMap {
        &self.mu
    }

    pub fn theta(&self) -> &LinMap {
        &self.theta
    }

    /// `μ^op = τ₁₃ μ`.
    pub fn mu_op(&self) -> LinMap {
        let n = self.dim();
        self.mu.permute_cod(&[n, n, n], &[2, 1, 0])
    }
}

/// Axioms (7)–(11), multiplicativity of `μ` and `θ`, and bijectivity of `θ`.
pub fn check_torsor_axioms(t: &TorsorData) -> Report {
    let n = t.dim();
    let f = t.algebra.field();
    let m = t.algebra.mult();
    let u = t.algebra.unit_map();
    let id = LinMap::identity(f, n);
    let mu = t.mu();
    let theta = t.theta();
    let mut r = Report::new();

    r.maps_equal(
        "(7)",
        "(T⊗∇)μ(x) = x⊗1",
        &mu.then_local(n, m, 1),
        &id.kron(&u),
        &[n],
        &[n, n],
    );
    r.maps_equal(
        "(8)",
        "(∇⊗T)μ(x) = 1⊗x",
        &mu.then_local(1, m, n),
        &u.kron(&id),
        &[n],
        &[n, n],
    );

    let mu_mu_left = mu.then_local(1, mu, n * n);
    r.maps_equal(
        "(9)",
        "(T⊗T^op⊗μ)μ = (μ⊗T^op⊗T)μ",
        &mu.then_local(n * n, mu, 1),
        &mu_mu_left,
        &[n],
        &[n; 5],
    );
    r.maps_equal(
        "(10)",
        "(T⊗T^op⊗θ⊗T^op⊗T)(μ⊗T^op⊗T)μ = (T⊗μ^op⊗T)μ",
        &mu_mu_left.then_local(n * n, theta, n * n),
        &mu.then_local(n, &t.mu_op(), n),
        &[n],
        &[n; 5],
    );
    r.maps_equal(
        "(11)",
        "(θ⊗θ⊗θ)μ = μθ",
        &mu.then_tensor(&[Slot::Map(theta), Slot::Map(theta), Slot::Map(theta)]),
        &mu.compose(theta),
        &[n],
        &[n, n, n],
    );

    let op = t.algebra.opposite();
    let factors = [&t.algebra, &op, &t.algebra];
    let products: Vec<Vector> = (0..n * n)
        .map(|c| tensor_product_mul(&factors, mu.column(c / n), mu.column(c % n)))
        .collect();
    let rhs = LinMap::from_columns(f, n * n * n, products);
    r.maps_equal(
        "mu-mult",
        "μ(xy) = μ(x)μ(y) in T⊗T^op⊗T",
        &mu.compose(m),
        &rhs,
        &[n, n],
        &[n, n, n],
    );
    let one3 = LinMap::from_vector(f, &tensor_unit(&factors));
    r.maps_equal(
        "mu-unit",
        "μ(1) = 1⊗1⊗1",
        &mu.compose(&u),
        &one3,
        &[1],
        &[n, n, n],
    );

    let theta_theta = LinMap::identity(f, n * n).then_tensor(&[Slot::Map(theta), Slot::Map(theta)]);
    r.maps_equal(
        "theta-mult",
        "θ(xy) = θ(x)θ(y)",
        &theta.compose(m),
        &m.compose(&theta_theta),
        &[n, n],
        &[n],
    );
    r.maps_equal("theta-unit", "θ(1) = 1", &theta.compose(&u), &u, &[1], &[n]);
    let full = rank(theta) == n;
    r.flag(
        "theta-bij",
        "θ is bijective",
        full,
        (!full).then(|| format!("rank {} < {n}", rank(theta))),
    );
    r
}

/// `x ↦ x₍₀₎ ⊗ S(x₍₁₎)⁽¹⁾ ⊗ S(x₍₁₎)⁽²⁾`, the common stem of both formulas for `θ`.
fn theta_stem(g: &GaloisObjectData) -> LinMap {
    let n = g.dim();
    g.coaction()
        .then_local(n, g.hopf().antipode(), 1)
        .then_local(n, g.gamma(), 1)
}

/// The two expressions for `θ`: `(x₍₀₎S(x₍₁₎)⁽²⁾)S(x₍₁₎)⁽¹⁾` and
/// `S(x₍₁₎)⁽¹⁾(x₍₀₎S(x₍₁₎)⁽²⁾)`.
pub fn theta_formulas(g: &GaloisObjectData) -> (LinMap, LinMap) {
    let n = g.dim();
    let m = g.algebra().mult();
    let stem = theta_stem(g);
    let first = stem
        .permute_cod(&[n, n, n], &[0, 2, 1])
        .then_local(1, m, n)
        .then_local(1, m, 1);
    let second = stem
        .permute_cod(&[n, n, n], &[1, 0, 2])
        .then_local(n, m, 1)
        .then_local(1, m, 1);
    (first, second)
}

/// `μ = (T⊗γ)ρ` and the first formula for `θ`, without any verification.
pub fn torsor_from_galois(g: &GaloisObjectData) -> Result<TorsorData> {
    g.hopf().powers()?;
    let n = g.dim();
    let mu = g.coaction().then_local(n, g.gamma(), 1);
    let (theta, _) = theta_formulas(g);
    TorsorData::new(g.algebra().clone(), mu, theta)
}

/// [`torsor_from_galois`], with the axioms are verified before
/// returning; a failure there is a bug, not bad input.
pub fn derive_torsor(g: &GaloisObjectData) -> Result<TorsorData> {
    let t = torsor_from_galois(g)?;
    let (theta, other) = theta_formulas(g);
    if let Some((r, c)) = theta.first_difference(&other) {
        return Err(Error::ImplementationFault(format!(
            "the two formulas for θ differ at ({r}, {c})"
        )));
    }
    let report = check_torsor_axioms(&t);
    if let Some(v) = report.failures().next() {
        return Err(Error::ImplementationFault(format!(
            "derived torsor violates {} {}{}",
            v.label,
            v.name,
            v.witness
                .as_ref()
                .map(|w| format!(": {w}"))
                .unwrap_or_default()
        )));
    }
    Ok(t)
}

/// `v ↦ v - (v_p / 1_p)·1` for the first nonzero coordinate `p` of the unit.
/// Its kernel is exactly `k·1`.
fn unit_complement_projection(a: &AlgebraData) -> LinMap {
    let f = a.field();
    let n = a.dim();
    let unit = a.unit();
    let p = unit
        .iter()
        .position(|x| !x.is_zero())
        .expect("nonzero unit");
    let inv = unit[p].inv().expect("nonzero pivot");
    LinMap::from_fn(f, n, n, |r, c| {
        let delta = if r == c { f.one() } else { f.zero() };
        if c == p {
            delta - &(&unit[r] * &inv)
        } else {
            delta
        }
    })
}

/// `x ↦ S(x₍₁₎)⁽¹⁾ ⊗ x₍₀₎S(x₍₁₎)⁽²⁾`.
fn lemma_element_x(g: &GaloisObjectData) -> LinMap {
    let n = g.dim();
    theta_stem(g)
        .permute_cod(&[n, n, n], &[1, 0, 2])
        .then_local(n, g.algebra().mult(), 1)
}

/// `h ↦ h₍₁₎⁽¹⁾ ⊗ S(h₍₂₎)⁽¹⁾ ⊗ h₍₁₎⁽²⁾S(h₍₂₎)⁽²⁾`.
fn lemma_element_h(g: &GaloisObjectData) -> LinMap {
    let n = g.dim();
    let gamma_s = g.gamma().compose(g.hopf().antipode());
    g.hopf()
        .comult()
        .then_tensor(&[Slot::Map(g.gamma()), Slot::Map(&gamma_s)])
        .permute_cod(&[n, n, n, n], &[0, 2, 1, 3])
        .then_local(n * n, g.algebra().mult(), 1)
}

/// Equations (12) and (13): the rightmost factor of each element is a scalar.
pub fn check_scalar_lemma(g: &GaloisObjectData) -> Report {
    let n = g.dim();
    let hd = g.hopf().dim();
    let f = g.field();
    let p = unit_complement_projection(g.algebra());
    let mut r = Report::new();
    let e12 = lemma_element_x(g).then_local(n, &p, 1);
    r.maps_equal(
        "(12)",
        "S(x₍₁₎)⁽¹⁾ ⊗ x₍₀₎S(x₍₁₎)⁽²⁾ ∈ T⊗k",
        &e12,
        &LinMap::zeros(f, n * n, n),
        &[n],
        &[n, n],
    );
    let e13 = lemma_element_h(g).then_local(n * n, &p, 1);
    r.maps_equal(
        "(13)",
        "h₍₁₎⁽¹⁾ ⊗ S(h₍₂₎)⁽¹⁾ ⊗ h₍₁₎⁽²⁾S(h₍₂₎)⁽²⁾ ∈ T⊗T⊗k",
        &e13,
        &LinMap::zeros(f, n * n * n, hd),
        &[hd],
        &[n, n, n],
    );
    r
}

/// Equations (14) and (15) for a torsor derived from `g`, plus bijectivity of `θ`.
pub fn check_theta_identities(g: &GaloisObjectData, t: &TorsorData) -> Report {
    let n = g.dim();
    let mut r = Report::new();
    let (first, second) = theta_formulas(g);
    r.maps_equal(
        "theta-forms",
        "both formulas for θ agree",
        &first,
        &second,
        &[n],
        &[n],
    );
    r.maps_equal(
        "(14)",
        "h⁽¹⁾ ⊗ θ(h⁽²⁾) = S(h)⁽²⁾ ⊗ S(h)⁽¹⁾",
        &g.gamma().then_local(n, t.theta(), 1),
        &g.gamma()
            .compose(g.hopf().antipode())
            .permute_cod(&[n, n], &[1, 0]),
        &[g.hopf().dim()],
        &[n, n],
    );
    match g.hopf().powers() {
        Ok(p) => r.extend(check_theta_colinearity(g, t, &p.s_squared)),
        Err(e) => {
            r.flag(
                "(15)",
                "ρθ(x) = θ(x₍₀₎) ⊗ S²(x₍₁₎)",
                false,
                Some(e.to_string()),
            );
        }
    }
    let full = rank(t.theta()) == n;
    r.flag("theta-bij", "θ is bijective", full, None);
    r
}

/// `ρθ = (θ⊗φ)ρ` for a given endomorphism `φ` of `H`; with `φ = S²` this is (15).
pub fn check_theta_colinearity(g: &GaloisObjectData, t: &TorsorData, twist: &LinMap) -> Report {
    let n = g.dim();
    let hd = g.hopf().dim();
    let rho = g.coaction();
    let mut r = Report::new();
    r.maps_equal(
        "(15)",
        "ρθ(x) = θ(x₍₀₎) ⊗ S²(x₍₁₎)",
        &rho.compose(t.theta()),
        &rho.then_tensor(&[Slot::Map(t.theta()), Slot::Map(twist)]),
        &[n],
        &[n, hd],
    );
    r
}

/// `x⊗y ↦ x₍₀₎⊗y₍₀₎⊗x₍₁₎y₍₁₎ - x⊗y⊗1`; its kernel is `H_l(T)`.
fn codiagonal_defect(g: &GaloisObjectData) -> LinMap {
    let n = g.dim();
    let hd = g.hopf().dim();
    let f = g.field();
    let rho = g.coaction();
    let codiag = LinMap::identity(f, n * n)
        .then_tensor(&[Slot::Map(rho), Slot::Map(rho)])
        .permute_cod(&[n, hd, n, hd], &[0, 2, 1, 3])
        .then_local(n * n, g.hopf().mult(), 1);
    codiag.sub(&LinMap::identity(f, n * n).kron(&g.hopf().unit_map()))
}

/// `H_l(T) ⊂ T⊗T^op` as the coinvariants of the codiagonal coaction on `T⊗T`,
/// with a report on its algebra structure and on the left coaction `μ`.
pub fn left_hopf_coinvariants(g: &GaloisObjectData) -> (Vec<Vector>, Report) {
    let n = g.dim();
    let hd = g.hopf().dim();
    let f = g.field();
    let rho = g.coaction();
    let defect = codiagonal_defect(g);
    let basis = kernel_basis(&defect);
    let mut r = Report::new();

    // x₍₀₎ ⊗ S(x₍₁₎) ⊗ y = x ⊗ y₍₁₎ ⊗ y₍₀₎
    let lhs =
        LinMap::identity(f, n * n)
            .then_local(1, rho, n)
            .then_local(n, g.hopf().antipode(), n);
    let rhs = LinMap::identity(f, n * n)
        .then_local(n, rho, 1)
        .permute_cod(&[n, n, hd], &[0, 2, 1]);
    let alt = kernel_basis(&lhs.sub(&rhs));
    let same = alt.len() == basis.len() && spans_contain(&basis, &alt, n * n, f);
    r.flag(
        "Hl-condition",
        "codiagonal coinvariants = {x₍₀₎⊗S(x₍₁₎)⊗y = x⊗y₍₁₎⊗y₍₀₎}",
        same,
        (!same).then(|| format!("dimensions {} and {}", basis.len(), alt.len())),
    );

    r.flag(
        "Hl-dim",
        "dim H_l(T) = dim H",
        basis.len() == hd,
        Some(format!("{} vs {hd}", basis.len())),
    );

    let op = g.algebra().opposite();
    let factors = [g.algebra(), &op];
    let mut closed = spans_contain(&basis, &[tensor_unit(&factors)], n * n, f);
    let mut products = Vec::with_capacity(basis.len() * basis.len());
    for a in &basis {
        for b in &basis {
            products.push(tensor_product_mul(&factors, a, b));
        }
    }
    closed &= spans_contain(&basis, &products, n * n, f);
    r.flag(
        "Hl-subalg",
        "H_l(T) is a unital subalgebra of T⊗T^op",
        closed,
        None,
    );

    let mu = g.coaction().then_local(n, g.gamma(), 1);
    r.maps_equal(
        "Hl-coaction",
        "μ(T) ⊂ H_l(T)⊗T",
        &mu.then_local(1, &defect, n),
        &LinMap::zeros(f, n * n * hd * n, n),
        &[n],
        &[n, n, hd, n],
    );
    (basis, r)
}

/// The torsor built from `g` reproduces `t`: `(T⊗β)μ = (T⊗β)μ'`, hence `μ = μ'`.
/// Also checks the axiom-only chain `(T⊗∇⊗T⊗T)(T⊗T⊗μ)μ = x⁽¹⁾⊗1⊗x⁽²⁾⊗x⁽³⁾`.
pub fn check_reconstruction(g: &GaloisObjectData, t: &TorsorData) -> Report {
    let n = g.dim();
    let hd = g.hopf().dim();
    let u = g.algebra().unit_map();
    let m = g.algebra().mult();
    let mu = t.mu();
    let mu_prime = g.coaction().then_local(n, g.gamma(), 1);
    let mut r = Report::new();
    r.maps_equal(
        "rec-chain",
        "(T⊗∇⊗T⊗T)(T⊗T⊗μ)μ = x⁽¹⁾⊗1⊗x⁽²⁾⊗x⁽³⁾",
        &mu.then_local(n * n, mu, 1).then_local(n, m, n * n),
        &mu.then_local(n, &u, n * n),
        &[n],
        &[n, n, n, n],
    );
    let beta_mu = mu.then_local(n, g.beta(), 1);
    r.maps_equal(
        "rec-beta-x",
        "(T⊗β)μ(x) = x₍₀₎⊗1⊗x₍₁₎",
        &beta_mu,
        &g.coaction().then_local(n, &u, hd),
        &[n],
        &[n, n, hd],
    );
    r.maps_equal(
        "rec-beta",
        "(T⊗β)μ = (T⊗β)μ'",
        &beta_mu,
        &mu_prime.then_local(n, g.beta(), 1),
        &[n],
        &[n, n, hd],
    );
    r.maps_equal("rec-mu", "μ = μ'", mu, &mu_prime, &[n], &[n, n, n]);
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        group_algebra, klein_sign_cocycle, sweedler_h4, trivial_galois, twisted_group_galois,
        GroupTable,
    };
    use crate::exactlin::{basis_vector, kron_vec, Field};

    fn q() -> Field {
        Field::Rationals
    }

    fn c2() -> GaloisObjectData {
        trivial_galois(&group_algebra(&GroupTable::cyclic(2).unwrap(), q())).unwrap()
    }

    fn sweedler() -> GaloisObjectData {
        trivial_galois(&sweedler_h4(q()).unwrap()).unwrap()
    }

    fn klein() -> GaloisObjectData {
        twisted_group_galois(&klein_sign_cocycle(q()).unwrap(), q()).unwrap()
    }

    fn e(n: usize, i: usize) -> Vector {
        basis_vector(q(), n, i)
    }

    #[test]
    fn c2_torsor() {
        let t = derive_torsor(&c2()).unwrap();
        assert!(t.theta().is_identity());
        let g = e(2, 1);
        assert_eq!(t.mu().apply(&g), kron_vec(&kron_vec(&g, &g), &g));
        assert!(check_torsor_axioms(&t).passed());
    }

    #[test]
    fn violating_first_axiom() {
        // μ(x) = 1⊗x⊗1
        let c = c2();
        let a = c.algebra();
        let u = a.unit_map();
        let mu = u.kron(&LinMap::identity(q(), 2)).kron(&u);
        let t = TorsorData::new(a.clone(), mu, LinMap::identity(q(), 2)).unwrap();
        let r = check_torsor_axioms(&t);
        let v = r.get("(7)").unwrap();
        assert!(!v.passed);
        assert_eq!(v.witness.as_ref().unwrap().input, vec![1]);
    }

    #[test]
    fn one_dimensional_torsor() {
        let a = AlgebraData::ground(q());
        let t = TorsorData::new(a, LinMap::identity(q(), 1), LinMap::identity(q(), 1)).unwrap();
        assert!(check_torsor_axioms(&t).passed());
    }

    #[test]
    fn klein_torsor() {
        let g = klein();
        let t = derive_torsor(&g).unwrap();
        assert!(t.theta().is_identity());
        for i in 0..4 {
            // u_i⁻¹ = σ(i,i)⁻¹ u_i, and σ(i,i) = -1 only for i = (1,1)
            let sign = if i == 3 { q().int(-1) } else { q().one() };
            let inv: Vector = e(4, i).iter().map(|x| x * &sign).collect();
            let expect = kron_vec(&kron_vec(&e(4, i), &inv), &e(4, i));
            assert_eq!(t.mu().apply(&e(4, i)), expect);
        }
    }

    #[test]
    fn sweedler_theta_is_not_identity() {
        let g = sweedler();
        let t = derive_torsor(&g).unwrap();
        assert!(!t.theta().is_identity());
        // θ(x) = -x, θ(g) = g
        assert_eq!(
            t.theta().apply(&e(4, 2)),
            e(4, 2).iter().map(|x| -x).collect::<Vec<_>>()
        );
        assert_eq!(t.theta().apply(&e(4, 1)), e(4, 1));
        let r = check_theta_identities(&g, &t);
        assert!(r.passed(), "{r}");
        let id = LinMap::identity(q(), 4);
        assert!(!check_theta_colinearity(&g, &t, &id).passed());
    }

    #[test]
    fn mu_op_swaps_outer_factors() {
        let t = derive_torsor(&sweedler()).unwrap();
        let back = t.mu_op().permute_cod(&[4, 4, 4], &[2, 1, 0]);
        assert_eq!(&back, t.mu());
    }

    #[test]
    fn scalar_lemma_elements() {
        let g = c2();
        let x = lemma_element_x(&g);
        assert_eq!(x.apply(&e(2, 1)), kron_vec(&e(2, 1), &e(2, 0)));
        assert_eq!(x.apply(&e(2, 0)), kron_vec(&e(2, 0), &e(2, 0)));
        assert!(check_scalar_lemma(&g).passed());
        assert!(check_scalar_lemma(&sweedler()).passed());
        assert!(check_scalar_lemma(&klein()).passed());
    }

    #[test]
    fn projection_kills_exactly_the_unit() {
        let p = unit_complement_projection(sweedler().algebra());
        assert_eq!(kernel_basis(&p), vec![e(4, 0)]);
    }

    #[test]
    fn left_coinvariants_of_c2() {
        let (basis, r) = left_hopf_coinvariants(&c2());
        assert!(r.passed(), "{r}");
        let expect = vec![kron_vec(&e(2, 0), &e(2, 0)), kron_vec(&e(2, 1), &e(2, 1))];
        assert!(spans_contain(&basis, &expect, 4, q()));
        assert_eq!(basis.len(), 2);
    }

    #[test]
    fn left_coinvariants_of_klein_and_sweedler() {
        let (basis, r) = left_hopf_coinvariants(&klein());
        assert!(r.passed(), "{r}");
        let diag: Vec<Vector> = (0..4).map(|i| kron_vec(&e(4, i), &e(4, i))).collect();
        assert!(spans_contain(&basis, &diag, 16, q()));
        let (_, r) = left_hopf_coinvariants(&sweedler());
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn reconstruction() {
        for g in [c2(), sweedler(), klein()] {
            let t = derive_torsor(&g).unwrap();
            assert!(check_reconstruction(&g, &t).passed());
        }
        let g = c2();
        let t = derive_torsor(&g).unwrap();
        let v = t.mu().then_local(2, g.beta(), 1).apply(&e(2, 1));
        assert_eq!(v, kron_vec(&kron_vec(&e(2, 1), &e(2, 0)), &e(2, 1)));
    }
}
