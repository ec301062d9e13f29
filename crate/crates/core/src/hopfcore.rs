//! Algebras, coalgebras, bialgebras and Hopf algebras given by structure
//! constants, with exhaustive law checkers and an antipode solver.
//!
//! Multiplication is a map `A ⊗ A -> A`, comultiplication `C -> C ⊗ C`, both in the
//! row-major tensor convention of [`crate::exactlin::TensorIndex`].

use crate::error::{Error, Result};
use crate::exactlin::{
    invert, kernel_basis, solve_linear, Field, LinMap, Scalar, Slot, TensorIndex, Vector,
};
use crate::report::Report;

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraData {
    mult: LinMap,
    unit: Vector,
}

impl AlgebraData {
    pub fn new(mult: LinMap, unit: Vector) -> Result<Self> {
        let dim = unit.len();
        if dim == 0 {
            return Err(Error::ZeroDimension("algebra"));
        }
        expect_shape("algebra multiplication", &mult, dim, dim * dim)?;
        if unit.iter().any(|u| !mult.field().contains(u)) {
            return Err(Error::FieldMismatch);
        }
        Ok(AlgebraData { mult, unit })
    }

    /// The one-dimensional algebra `k`.
    pub fn ground(field: Field) -> Self {
        AlgebraData {
            mult: LinMap::identity(field, 1),
            unit: vec![field.one()],
        }
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// The unit as a map `k -> A`.
    pub fn unit_map(&self) -> LinMap {
        LinMap::from_vector(self.field(), &self.unit)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        self.mult.column(i * self.dim() + j)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        tensor_product_mul(&[self], a, b)
    }

    /// Same basis, multiplication with the two input slots exchanged.
    pub fn opposite(&self) -> AlgebraData {
        let n = self.dim();
        let swap = LinMap::factor_permutation(self.field(), &[n, n], &[1, 0]);
        AlgebraData {
            mult: self.mult.compose(&swap),
            unit: self.unit.clone(),
        }
    }
}

fn expect_shape(context: &str, m: &LinMap, cod: usize, dom: usize) -> Result<()> {
    if m.cod_dim() != cod {
        return Err(Error::DimensionMismatch {
            context: format!("{context} (codomain)"),
            expected: cod,
            actual: m.cod_dim(),
        });
    }
    if m.dom_dim() != dom {
        return Err(Error::DimensionMismatch {
            context: format!("{context} (domain)"),
            expected: dom,
            actual: m.dom_dim(),
        });
    }
    Ok(())
}

/// Product of two elements of `A_1 ⊗ ... ⊗ A_r` (factorwise multiplication).
/// Walks only the nonzero coordinates, so it stays cheap for sparse tensors.
pub fn tensor_product_mul(factors: &[&AlgebraData], u: &[Scalar], v: &[Scalar]) -> Vector {
    let dims: Vec<usize> = factors.iter().map(|a| a.dim()).collect();
    let index = TensorIndex::new(&dims);
    let size = index.size();
    assert_eq!(u.len(), size, "left factor length");
    assert_eq!(v.len(), size, "right factor length");
    let field = factors[0].field();
    let mut out = vec![field.zero(); size];
    let nz = |w: &[Scalar]| -> Vec<(Vec<usize>, Scalar)> {
        w.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (index.unflatten(i), x.clone()))
            .collect()
    };
    let (nu, nv) = (nz(u), nz(v));
    for (iu, cu) in &nu {
        for (iv, cv) in &nv {
            let coeff = cu * cv;
            accumulate_product(factors, iu, iv, 0, 0, coeff, &mut out);
        }
    }
    out
}

fn accumulate_product(
    factors: &[&AlgebraData],
    iu: &[usize],
    iv: &[usize],
    k: usize,
    flat: usize,
    coeff: Scalar,
    out: &mut [Scalar],
) {
    if k == factors.len() {
        out[flat] += &coeff;
        return;
    }
    let a = factors[k];
    for (j, x) in a.basis_product(iu[k], iv[k]).iter().enumerate() {
        if !x.is_zero() {
            accumulate_product(factors, iu, iv, k + 1, flat * a.dim() + j, &coeff * x, out);
        }
    }
}

/// Unit of `A_1 ⊗ ... ⊗ A_r`.
pub fn tensor_unit(factors: &[&AlgebraData]) -> Vector {
    factors
        .iter()
        .skip(1)
        .fold(factors[0].unit.clone(), |acc, a| {
            crate::exactlin::kron_vec(&acc, &a.unit)
        })
}

/// Associativity and two-sided unitality.
pub fn check_algebra(a: &AlgebraData) -> Report {
    let n = a.dim();
    let f = a.field();
    let m = a.mult();
    let mut r = Report::new();
    let lhs = LinMap::identity(f, n * n * n)
        .then_local(1, m, n)
        .then_local(1, m, 1);
    let rhs = LinMap::identity(f, n * n * n)
        .then_local(n, m, 1)
        .then_local(1, m, 1);
    r.maps_equal(
        "alg-assoc",
        "associativity m(m⊗id) = m(id⊗m)",
        &lhs,
        &rhs,
        &[n, n, n],
        &[n],
    );
    let id = LinMap::identity(f, n);
    let u = a.unit_map();
    let left = m.compose(&u.kron(&id));
    let right = m.compose(&id.kron(&u));
    r.maps_equal(
        "alg-unit-l",
        "left unitality m(1⊗x) = x",
        &left,
        &id,
        &[n],
        &[n],
    );
    r.maps_equal(
        "alg-unit-r",
        "right unitality m(x⊗1) = x",
        &right,
        &id,
        &[n],
        &[n],
    );
    r
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoalgebraData {
    comult: LinMap,
    counit: LinMap,
}

impl CoalgebraData {
    pub fn new(comult: LinMap, counit: LinMap) -> Result<Self> {
        let dim = counit.dom_dim();
        if dim == 0 {
            return Err(Error::ZeroDimension("coalgebra"));
        }
        expect_shape("counit", &counit, 1, dim)?;
        expect_shape("comultiplication", &comult, dim * dim, dim)?;
        if comult.field() != counit.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(CoalgebraData { comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.counit.dom_dim()
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }
}

/// Coassociativity and both counit laws.
pub fn check_coalgebra(c: &CoalgebraData) -> Report {
    let n = c.dim();
    let d = c.comult();
    let e = c.counit();
    let id = LinMap::identity(c.field(), n);
    let mut r = Report::new();
    let lhs = d.then_local(1, d, n);
    let rhs = d.then_local(n, d, 1);
    r.maps_equal(
        "coalg-coassoc",
        "coassociativity (Δ⊗id)Δ = (id⊗Δ)Δ",
        &lhs,
        &rhs,
        &[n],
        &[n, n, n],
    );
    r.maps_equal(
        "coalg-counit-l",
        "(ε⊗id)Δ = id",
        &d.then_local(1, e, n),
        &id,
        &[n],
        &[n],
    );
    r.maps_equal(
        "coalg-counit-r",
        "(id⊗ε)Δ = id",
        &d.then_local(n, e, 1),
        &id,
        &[n],
        &[n],
    );
    r
}

/// An algebra and a coalgebra on the same space; a Hopf algebra without antipode.
#[derive(Clone, Debug, PartialEq)]
pub struct BialgebraData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
}

impl BialgebraData {
    pub fn new(algebra: AlgebraData, coalgebra: CoalgebraData) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch {
                context: "bialgebra coalgebra dimension".into(),
                expected: algebra.dim(),
                actual: coalgebra.dim(),
            });
        }
        if algebra.field() != coalgebra.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(BialgebraData { algebra, coalgebra })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }
}

/// Algebra and coalgebra laws, then compatibility: Δ and ε are unital algebra maps.
pub fn check_bialgebra(b: &BialgebraData) -> Report {
    let mut r = check_algebra(&b.algebra);
    r.extend(check_coalgebra(&b.coalgebra));
    r.extend(check_bialgebra_compatibility(b));
    r
}

fn check_bialgebra_compatibility(b: &BialgebraData) -> Report {
    let n = b.dim();
    let f = b.field();
    let m = b.algebra.mult();
    let d = b.coalgebra.comult();
    let e = b.coalgebra.counit();
    let mut r = Report::new();
    let lhs = d.compose(m);
    let rhs = LinMap::identity(f, n * n)
        .then_tensor(&[Slot::Map(d), Slot::Map(d)])
        .permute_cod(&[n, n, n, n], &[0, 2, 1, 3])
        .then_tensor(&[Slot::Map(m), Slot::Map(m)]);
    r.maps_equal(
        "bialg-mult",
        "Δ(xy) = Δ(x)Δ(y)",
        &lhs,
        &rhs,
        &[n, n],
        &[n, n],
    );
    let u = b.algebra.unit_map();
    r.maps_equal(
        "bialg-unit",
        "Δ(1) = 1⊗1",
        &d.compose(&u),
        &u.kron(&u),
        &[1],
        &[n, n],
    );
    r.maps_equal(
        "bialg-counit-mult",
        "ε(xy) = ε(x)ε(y)",
        &e.compose(m),
        &e.kron(e),
        &[n, n],
        &[1],
    );
    r.maps_equal(
        "bialg-counit-unit",
        "ε(1) = 1",
        &e.compose(&u),
        &LinMap::identity(f, 1),
        &[1],
        &[1],
    );
    r
}

/// Finds `S` with `m(S⊗id)Δ = uε` by solving for its `n²` entries, then checks the
/// right-sided equation. A left convolution inverse of id equals the antipode when
/// one exists, so a non-unique or one-sided solution means there is none.
pub fn solve_antipode(b: &BialgebraData) -> Result<LinMap> {
    let n = b.dim();
    let f = b.field();
    let m = &b.algebra;
    let d = b.coalgebra.comult();
    let e = b.coalgebra.counit();
    // unknown (j, a) is the coefficient of e_j in S(e_a), flattened as j * n + a.
    // equation (i, k): Σ_{a,b,j} Δ(e_i)[a,b] S[j,a] (e_j e_b)[k] = ε(e_i) 1[k].
    let mut system = LinMap::zeros(f, n * n, n * n);
    let mut rhs = vec![f.zero(); n * n];
    for i in 0..n {
        for (ab, c) in d.column(i).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (a, bb) = (ab / n, ab % n);
            for j in 0..n {
                for (k, x) in m.basis_product(j, bb).iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let row = i * n + k;
                    let col = j * n + a;
                    let v = system.get(row, col) + &(c * x);
                    system.set(row, col, v);
                }
            }
        }
        for k in 0..n {
            rhs[i * n + k] = e.get(0, i) * &m.unit()[k];
        }
    }
    let sol = solve_linear(&system, &rhs)
        .ok_or_else(|| Error::NoAntipode("left convolution equation is inconsistent".into()))?;
    if !kernel_basis(&system).is_empty() {
        return Err(Error::NoAntipode(
            "left convolution inverse is not unique".into(),
        ));
    }
    let s = LinMap::from_fn(f, n, n, |j, a| sol[j * n + a].clone());
    let right = antipode_side(b, &s, false);
    let target = e_unit(b);
    if right != target {
        return Err(Error::NoAntipode("right antipode equation fails".into()));
    }
    Ok(s)
}

fn e_unit(b: &BialgebraData) -> LinMap {
    b.algebra.unit_map().compose(b.coalgebra.counit())
}

/// `m(S⊗id)Δ` when `left`, else `m(id⊗S)Δ`.
fn antipode_side(b: &BialgebraData, s: &LinMap, left: bool) -> LinMap {
    let n = b.dim();
    let slots = if left {
        [Slot::Map(s), Slot::Id(n)]
    } else {
        [Slot::Id(n), Slot::Map(s)]
    };
    b.coalgebra
        .comult()
        .then_tensor(&slots)
        .then_local(1, b.algebra.mult(), 1)
}

#[derive(Clone, Debug, PartialEq)]
pub struct HopfData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    antipode: LinMap,
}

impl HopfData {
    /// Attaches a given antipode (shape-checked only; see [`check_hopf`]).
    pub fn with_antipode(b: BialgebraData, antipode: LinMap) -> Result<Self> {
        expect_shape("antipode", &antipode, b.dim(), b.dim())?;
        if antipode.field() != b.field() {
            return Err(Error::FieldMismatch);
        }
        Ok(HopfData {
            algebra: b.algebra,
            coalgebra: b.coalgebra,
            antipode,
        })
    }

    /// Solves for the antipode.
    pub fn from_bialgebra(b: BialgebraData) -> Result<Self> {
        let s = solve_antipode(&b)?;
        Self::with_antipode(b, s)
    }

    pub fn bialgebra(&self) -> BialgebraData {
        BialgebraData {
            algebra: self.algebra.clone(),
            coalgebra: self.coalgebra.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn mult(&self) -> &LinMap {
        self.algebra.mult()
    }

    pub fn unit_map(&self) -> LinMap {
        self.algebra.unit_map()
    }

    pub fn comult(&self) -> &LinMap {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &LinMap {
        self.coalgebra.counit()
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn powers(&self) -> Result<AntipodePowers> {
        antipode_powers(self)
    }
}

/// Full check: bialgebra laws, both antipode equations, bijectivity of `S`.
pub fn check_hopf(h: &HopfData) -> Report {
    let b = h.bialgebra();
    let n = h.dim();
    let mut r = check_bialgebra(&b);
    let target = e_unit(&b);
    let s = h.antipode();
    r.maps_equal(
        "antipode-l",
        "m(S⊗id)Δ = uε",
        &antipode_side(&b, s, true),
        &target,
        &[n],
        &[n],
    );
    r.maps_equal(
        "antipode-r",
        "m(id⊗S)Δ = uε",
        &antipode_side(&b, s, false),
        &target,
        &[n],
        &[n],
    );
    r.flag("antipode-bij", "S is bijective", invert(s).is_ok(), None);
    r
}

#[derive(Clone, Debug, PartialEq)]
pub struct AntipodePowers {
    pub s_inv: LinMap,
    pub s_squared: LinMap,
    pub s_inv_squared: LinMap,
}

pub fn antipode_powers(h: &HopfData) -> Result<AntipodePowers> {
    let s = h.antipode();
    let s_inv = invert(s).map_err(|_| Error::NonBijectiveAntipode)?;
    Ok(AntipodePowers {
        s_squared: s.compose(s),
        s_inv_squared: s_inv.compose(&s_inv),
        s_inv,
    })
}
