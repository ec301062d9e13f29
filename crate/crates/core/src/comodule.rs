//! Right comodule algebras, their coinvariants, the canonical map
//! `β(x⊗y) = x y₍₀₎ ⊗ y₍₁₎` and the translation map `γ(h) = β⁻¹(1⊗h)`.

use crate::error::{Error, Result};
use crate::exactlin::{invert, kernel_basis, Field, LinMap, Scalar, Slot, Vector};
use crate::hopfcore::{AlgebraData, HopfData};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleAlgebraData {
    pub algebra: AlgebraData,
    pub hopf: HopfData,
    coaction: LinMap,
}

impl ComoduleAlgebraData {
    pub fn new(algebra: AlgebraData, hopf: HopfData, coaction: LinMap) -> Result<Self> {
        let (n, h) = (algebra.dim(), hopf.dim());
        if algebra.field() != hopf.field() || coaction.field() != hopf.field() {
            return Err(Error::FieldMismatch);
        }
        if coaction.dom_dim() != n || coaction.cod_dim() != n * h {
            return Err(Error::DimensionMismatch {
                context: "coaction T -> T⊗H".into(),
                expected: n * n * h,
                actual: coaction.dom_dim() * coaction.cod_dim(),
            });
        }
        Ok(ComoduleAlgebraData {
            algebra,
            hopf,
            coaction,
        })
    }

    pub fn coaction(&self) -> &LinMap {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn hopf_dim(&self) -> usize {
        self.hopf.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    /// `x ↦ x ⊗ 1_H`.
    fn trivial_coaction(&self) -> LinMap {
        LinMap::identity(self.field(), self.dim()).kron(&self.hopf.unit_map())
    }
}

/// Comodule laws and multiplicativity of the coaction.
pub fn check_comodule_algebra(d: &ComoduleAlgebraData) -> Report {
    let (n, h) = (d.dim(), d.hopf_dim());
    let f = d.field();
    let rho = d.coaction();
    let mut r = Report::new();
    r.maps_equal(
        "com-coassoc",
        "(ρ⊗id)ρ = (id⊗Δ)ρ",
        &rho.then_local(1, rho, h),
        &rho.then_local(n, d.hopf.comult(), 1),
        &[n],
        &[n, h, h],
    );
    r.maps_equal(
        "com-counit",
        "(id⊗ε)ρ = id",
        &rho.then_local(n, d.hopf.counit(), 1),
        &LinMap::identity(f, n),
        &[n],
        &[n],
    );
    let lhs = rho.compose(d.algebra.mult());
    let rhs = LinMap::identity(f, n * n)
        .then_tensor(&[Slot::Map(rho), Slot::Map(rho)])
        .permute_cod(&[n, h, n, h], &[0, 2, 1, 3])
        .then_tensor(&[Slot::Map(d.algebra.mult()), Slot::Map(d.hopf.mult())]);
    r.maps_equal("com-mult", "ρ(xy) = ρ(x)ρ(y)", &lhs, &rhs, &[n, n], &[n, h]);
    let u = d.algebra.unit_map();
    r.maps_equal(
        "com-unit",
        "ρ(1) = 1⊗1",
        &rho.compose(&u),
        &u.kron(&d.hopf.unit_map()),
        &[1],
        &[n, h],
    );
    r
}

/// Basis of `{t : ρ(t) = t⊗1}`.
pub fn coinvariants(d: &ComoduleAlgebraData) -> Vec<Vector> {
    kernel_basis(&d.coaction().sub(&d.trivial_coaction()))
}

/// `(∇⊗H)(T⊗ρ)` on `T⊗T`. Only defined when the coinvariants are `k·1`, so that the
/// tensor product over the coinvariants is the plain one.
pub fn canonical_beta(d: &ComoduleAlgebraData) -> Result<LinMap> {
    let k = coinvariants(d).len();
    if k > 1 {
        return Err(Error::CoinvariantsTooLarge(k));
    }
    Ok(beta_map(d))
}

fn beta_map(d: &ComoduleAlgebraData) -> LinMap {
    let (n, h) = (d.dim(), d.hopf_dim());
    LinMap::identity(d.field(), n * n)
        .then_local(n, d.coaction(), 1)
        .then_local(1, d.algebra.mult(), h)
}

/// A comodule algebra with coinvariants `k` and bijective canonical map.
#[derive(Clone, Debug, PartialEq)]
pub struct GaloisObjectData {
    pub base: ComoduleAlgebraData,
    beta: LinMap,
    beta_inv: LinMap,
    gamma: LinMap,
}

impl GaloisObjectData {
    pub fn algebra(&self) -> &AlgebraData {
        &self.base.algebra
    }

    pub fn hopf(&self) -> &HopfData {
        &self.base.hopf
    }

    pub fn coaction(&self) -> &LinMap {
        self.base.coaction()
    }

    pub fn beta(&self) -> &LinMap {
        &self.beta
    }

    pub fn beta_inv(&self) -> &LinMap {
        &self.beta_inv
    }

    /// `γ : H -> T⊗T`, `h ↦ h⁽¹⁾⊗h⁽²⁾`.
    pub fn gamma(&self) -> &LinMap {
        &self.gamma
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    /// `γ(h)` for a coordinate vector `h`.
    pub fn translate(&self, h: &[Scalar]) -> Vector {
        self.gamma.apply(h)
    }
}

/// Decides the Galois property and builds `β`, `β⁻¹`, `γ`; the six identities of
/// the translation map are verified before returning.
pub fn make_galois(d: &ComoduleAlgebraData) -> Result<GaloisObjectData> {
    let k = coinvariants(d).len();
    if k > 1 {
        return Err(Error::CoinvariantsTooLarge(k));
    }
    if k == 0 {
        return Err(Error::NotGalois("the unit is not coinvariant".into()));
    }
    let (n, h) = (d.dim(), d.hopf_dim());
    if n != h {
        return Err(Error::NotGalois(format!(
            "β : T⊗T -> T⊗H cannot be bijective with dim T = {n}, dim H = {h}"
        )));
    }
    let beta = beta_map(d);
    let beta_inv = invert(&beta).map_err(|_| Error::NotGalois("β is singular".into()))?;
    let one_tensor = d.algebra.unit_map().kron(&LinMap::identity(d.field(), h));
    let gamma = beta_inv.compose(&one_tensor);
    let g = GaloisObjectData {
        base: d.clone(),
        beta,
        beta_inv,
        gamma,
    };
    let report = check_gamma_identities(&g);
    if let Some(v) = report.failures().next() {
        return Err(Error::IdentityFailure {
            label: v.label.clone(),
            witness: Box::new(v.witness.clone().expect("map equality carries a witness")),
        });
    }
    Ok(g)
}

/// The six identities satisfied by the translation map, as map equalities.
pub fn check_gamma_identities(g: &GaloisObjectData) -> Report {
    let n = g.dim();
    let hd = g.hopf().dim();
    let f = g.field();
    let m = g.algebra().mult();
    let gamma = g.gamma();
    let rho = g.coaction();
    let hopf = g.hopf();
    let u = g.algebra().unit_map();
    let id_t = LinMap::identity(f, n);
    let mut r = Report::new();

    // x₍₀₎ x₍₁₎⁽¹⁾ ⊗ x₍₁₎⁽²⁾ = 1 ⊗ x
    let lhs = rho.then_local(n, gamma, 1).then_local(1, m, n);
    r.maps_equal(
        "(1)",
        "x₍₀₎x₍₁₎⁽¹⁾ ⊗ x₍₁₎⁽²⁾ = 1⊗x",
        &lhs,
        &u.kron(&id_t),
        &[n],
        &[n, n],
    );

    // h⁽¹⁾ h⁽²⁾ = ε(h) 1
    r.maps_equal(
        "(2)",
        "h⁽¹⁾h⁽²⁾ = ε(h)1",
        &m.compose(gamma),
        &u.compose(hopf.counit()),
        &[hd],
        &[n],
    );

    // h⁽¹⁾ ⊗ h⁽²⁾₍₀₎ ⊗ h⁽²⁾₍₁₎ = h₍₁₎⁽¹⁾ ⊗ h₍₁₎⁽²⁾ ⊗ h₍₂₎
    let lhs = gamma.then_local(n, rho, 1);
    let rhs = hopf.comult().then_local(1, gamma, hd);
    r.maps_equal("(3)", "(T⊗ρ)γ = (γ⊗H)Δ", &lhs, &rhs, &[hd], &[n, n, hd]);

    // h⁽¹⁾₍₀₎ ⊗ h⁽²⁾ ⊗ h⁽¹⁾₍₁₎ = h₍₂₎⁽¹⁾ ⊗ h₍₂₎⁽²⁾ ⊗ S(h₍₁₎)
    let lhs = gamma
        .then_local(1, rho, n)
        .permute_cod(&[n, hd, n], &[0, 2, 1]);
    let rhs = hopf
        .comult()
        .then_tensor(&[Slot::Map(hopf.antipode()), Slot::Map(gamma)])
        .permute_cod(&[hd, n, n], &[1, 2, 0]);
    r.maps_equal("(4)", "(ρ⊗T)γ twisted by S", &lhs, &rhs, &[hd], &[n, n, hd]);

    // (gh)⁽¹⁾ ⊗ (gh)⁽²⁾ = h⁽¹⁾g⁽¹⁾ ⊗ g⁽²⁾h⁽²⁾
    let lhs = gamma.compose(hopf.mult());
    let rhs = LinMap::identity(f, hd * hd)
        .then_tensor(&[Slot::Map(gamma), Slot::Map(gamma)])
        .permute_cod(&[n, n, n, n], &[2, 0, 1, 3])
        .then_tensor(&[Slot::Map(m), Slot::Map(m)]);
    r.maps_equal(
        "(5)",
        "γ(gh) = h⁽¹⁾g⁽¹⁾ ⊗ g⁽²⁾h⁽²⁾",
        &lhs,
        &rhs,
        &[hd, hd],
        &[n, n],
    );

    // γ(1) = 1 ⊗ 1
    r.maps_equal(
        "(6)",
        "γ(1) = 1⊗1",
        &gamma.compose(&hopf.unit_map()),
        &u.kron(&u),
        &[1],
        &[n, n],
    );
    r
}
