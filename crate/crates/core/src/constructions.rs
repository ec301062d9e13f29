//! Built-in Hopf algebras and Galois objects: group algebras and their duals,
//! Sweedler's four-dimensional algebra, Taft algebras, regular Galois objects and
//! cocycle-twisted group algebras.

use log::warn;

use crate::comodule::{make_galois, ComoduleAlgebraData, GaloisObjectData};
use crate::error::{Error, Result};
use crate::exactlin::{basis_vector, kron_vec, Field, LinMap, Scalar};
use crate::hopfcore::{tensor_product_mul, AlgebraData, BialgebraData, CoalgebraData, HopfData};
use crate::report::{Report, Verdict, Witness};

/// A finite group by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    mult: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates the group axioms and derives identity and inverses.
    pub fn new(mult: Vec<Vec<usize>>) -> Result<Self> {
        let n = mult.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if mult
            .iter()
            .any(|row| row.len() != n || row.iter().any(|&x| x >= n))
        {
            return Err(Error::InvalidGroup("table is not n×n over 0..n".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mult[e][a] == a && mult[a][e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mult[a][b] == identity && mult[b][a] == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupTable {
            mult,
            inverse,
            identity,
        })
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(
            (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
        )
    }

    /// Direct product; `(a, b)` has index `a * |H| + b`.
    pub fn product(g: &GroupTable, h: &GroupTable) -> Result<Self> {
        let (m, n) = (g.order(), h.order());
        Self::new(
            (0..m * n)
                .map(|x| {
                    (0..m * n)
                        .map(|y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n))
                        .collect()
                })
                .collect(),
        )
    }

    /// The Klein four-group `C₂ × C₂`.
    pub fn klein() -> Self {
        let c2 = Self::cyclic(2).expect("C2");
        Self::product(&c2, &c2).expect("C2 x C2")
    }

    /// Symmetric group on `n` letters, permutations in lexicographic order, composed
    /// as functions: `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("permutation");
        let mult = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&i| s[i]).collect()))
                    .collect()
            })
            .collect();
        Self::new(mult)
    }

    pub fn order(&self) -> usize {
        self.mult.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mult
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// A normalized 2-cocycle `σ : G × G -> k^×`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoCocycle {
    group: GroupTable,
    values: Vec<Vec<Scalar>>,
}

impl TwoCocycle {
    /// Stores `values`, rescaled by `σ(e,e)⁻¹` if needed. Rescaling by a constant is
    /// a coboundary change, so normalization loses nothing. The cocycle condition
    /// itself is not enforced here; see [`check_two_cocycle`].
    pub fn new(group: GroupTable, mut values: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = group.order();
        if values.len() != n || values.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCocycle("value table is not |G|×|G|".into()));
        }
        if values.iter().flatten().any(Scalar::is_zero) {
            return Err(Error::InvalidCocycle("values must be nonzero".into()));
        }
        let e = group.identity();
        let see = values[e][e].clone();
        if !see.is_one() {
            warn!("2-cocycle not normalized (σ(e,e) = {see}); rescaling by its inverse");
            let inv = see.inv().expect("nonzero");
            for x in values.iter_mut().flatten() {
                *x = &*x * &inv;
            }
        }
        Ok(TwoCocycle { group, values })
    }

    pub fn trivial(group: GroupTable, field: Field) -> Self {
        let n = group.order();
        TwoCocycle {
            group,
            values: vec![vec![field.one(); n]; n],
        }
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn value(&self, g: usize, h: usize) -> &Scalar {
        &self.values[g][h]
    }

    pub fn field(&self) -> Field {
        self.values[0][0].field()
    }
}

/// `σ((a,b),(c,d)) = (-1)^{bc}` on the Klein four-group.
pub fn klein_sign_cocycle(field: Field) -> Result<TwoCocycle> {
    let values = (0..4)
        .map(|x| {
            (0..4)
                .map(|y| {
                    let (b, c) = (x % 2, y / 2);
                    field.int(if b * c == 1 { -1 } else { 1 })
                })
                .collect()
        })
        .collect();
    TwoCocycle::new(GroupTable::klein(), values)
}

/// Cocycle condition `σ(g,h)σ(gh,k) = σ(h,k)σ(g,hk)` on every triple, and normalization.
pub fn check_two_cocycle(c: &TwoCocycle) -> Report {
    let g = c.group();
    let n = g.order();
    let mut report = Report::new();
    let mut witness = None;
    'outer: for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                let lhs = c.value(a, b) * c.value(g.mul(a, b), d);
                let rhs = c.value(b, d) * c.value(a, g.mul(b, d));
                if lhs != rhs {
                    witness = Some(Witness {
                        input: vec![a, b, d],
                        output: vec![],
                        difference: (&lhs - &rhs).to_string(),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                    break 'outer;
                }
            }
        }
    }
    report.verdicts.push(Verdict {
        label: "cocycle".into(),
        name: "σ(g,h)σ(gh,k) = σ(h,k)σ(g,hk)".into(),
        passed: witness.is_none(),
        witness,
        note: None,
    });
    let e = g.identity();
    let normalized = (0..n).all(|x| c.value(e, x).is_one() && c.value(x, e).is_one());
    report.flag("cocycle-norm", "σ(e,g) = σ(g,e) = 1", normalized, None);
    report
}

fn hopf_from_parts(
    mult: LinMap,
    unit: Vec<Scalar>,
    comult: LinMap,
    counit: LinMap,
    antipode: Option<LinMap>,
) -> Result<HopfData> {
    let b = BialgebraData::new(
        AlgebraData::new(mult, unit)?,
        CoalgebraData::new(comult, counit)?,
    )?;
    match antipode {
        Some(s) => HopfData::with_antipode(b, s),
        None => HopfData::from_bialgebra(b),
    }
}

/// Group algebra `kG`: `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &GroupTable, field: Field) -> HopfData {
    let n = g.order();
    let mult = LinMap::from_fn(field, n, n * n, |r, c| {
        if g.mul(c / n, c % n) == r {
            field.one()
        } else {
            field.zero()
        }
    });
    let comult = LinMap::from_fn(field, n * n, n, |r, c| {
        if r == c * n + c {
            field.one()
        } else {
            field.zero()
        }
    });
    let counit = LinMap::from_fn(field, 1, n, |_, _| field.one());
    let antipode = LinMap::from_fn(field, n, n, |r, c| {
        if g.inverse(c) == r {
            field.one()
        } else {
            field.zero()
        }
    });
    hopf_from_parts(
        mult,
        basis_vector(field, n, g.identity()),
        comult,
        counit,
        Some(antipode),
    )
    .expect("group algebra shapes")
}

/// Dual group algebra `k^G` on indicator functions `e_g`.
pub fn dual_group_algebra(g: &GroupTable, field: Field) -> HopfData {
    let n = g.order();
    let mult = LinMap::from_fn(field, n, n * n, |r, c| {
        if c / n == c % n && c / n == r {
            field.one()
        } else {
            field.zero()
        }
    });
    let comult = LinMap::from_fn(field, n * n, n, |r, c| {
        if g.mul(r / n, r % n) == c {
            field.one()
        } else {
            field.zero()
        }
    });
    let counit = LinMap::from_fn(field, 1, n, |_, c| {
        if c == g.identity() {
            field.one()
        } else {
            field.zero()
        }
    });
    let antipode = LinMap::from_fn(field, n, n, |r, c| {
        if g.inverse(c) == r {
            field.one()
        } else {
            field.zero()
        }
    });
    hopf_from_parts(mult, vec![field.one(); n], comult, counit, Some(antipode))
        .expect("dual group algebra shapes")
}

/// Sweedler's algebra on the basis `1, g, x, gx`: `g² = 1`, `x² = 0`, `xg = -gx`,
/// `Δx = x⊗1 + g⊗x`. The antipode is solved for.
pub fn sweedler_h4(field: Field) -> Result<HopfData> {
    if field.characteristic() == 2 {
        return Err(Error::BadCharacteristic(2));
    }
    taft_with_root(2, field.int(-1))
}

/// Taft algebra of dimension `n²` over `F_p`, with `q` the least primitive root
/// raised to `(p-1)/n`. Basis `g^i x^j` sits at index `j*n + i`.
pub fn taft_algebra(n: usize, field: Field) -> Result<HopfData> {
    if n < 2 {
        return Err(Error::NoRootOfUnity {
            n,
            p: field.characteristic(),
        });
    }
    let q = match field {
        Field::Prime { p } if (p - 1) % n as u64 == 0 => {
            let r = least_primitive_root(p);
            field.int(r as i64).pow((p - 1) / n as u64)
        }
        Field::Rationals if n == 2 => field.int(-1),
        _ => {
            return Err(Error::NoRootOfUnity {
                n,
                p: field.characteristic(),
            })
        }
    };
    taft_with_root(n, q)
}

fn least_primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    let f = Field::Prime { p };
    (2..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&r| !f.int(g as i64).pow((p - 1) / r).is_one())
        })
        .expect("prime fields have primitive roots")
}

fn taft_with_root(n: usize, q: Scalar) -> Result<HopfData> {
    let field = q.field();
    let dim = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    // (g^a x^b)(g^c x^d) = q^{bc} g^{a+c} x^{b+d}
    let mut mult = LinMap::zeros(field, dim, dim * dim);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if b + d < n {
                        let col = idx(a, b) * dim + idx(c, d);
                        mult.set(idx((a + c) % n, b + d), col, q.pow((b * c) as u64));
                    }
                }
            }
        }
    }
    let algebra = AlgebraData::new(mult.clone(), basis_vector(field, dim, 0))?;
    // Δ on generators, extended multiplicatively through H⊗H
    let e = |i, j| basis_vector(field, dim, idx(i, j));
    let dg = kron_vec(&e(1, 0), &e(1, 0));
    let dx: Vec<Scalar> = kron_vec(&e(0, 1), &e(0, 0))
        .iter()
        .zip(kron_vec(&e(1, 0), &e(0, 1)).iter())
        .map(|(a, b)| a + b)
        .collect();
    let hh = [&algebra, &algebra];
    let mut columns = vec![Vec::new(); dim];
    for a in 0..n {
        for b in 0..n {
            let mut v = kron_vec(&e(0, 0), &e(0, 0));
            for _ in 0..a {
                v = tensor_product_mul(&hh, &v, &dg);
            }
            for _ in 0..b {
                v = tensor_product_mul(&hh, &v, &dx);
            }
            columns[idx(a, b)] = v;
        }
    }
    let comult = LinMap::from_columns(field, dim * dim, columns);
    let counit = LinMap::from_fn(field, 1, dim, |_, c| {
        if c / n == 0 {
            field.one()
        } else {
            field.zero()
        }
    });
    hopf_from_parts(mult, basis_vector(field, dim, 0), comult, counit, None)
}

/// `H` as a right comodule algebra over itself via `Δ`.
pub fn trivial_galois(h: &HopfData) -> Result<GaloisObjectData> {
    let d = ComoduleAlgebraData::new(h.algebra.clone(), h.clone(), h.comult().clone())?;
    make_galois(&d)
}

/// The twisted group algebra `k_σG`, `u_g u_h = σ(g,h) u_{gh}`, with coaction
/// `u_g ↦ u_g ⊗ g` over `kG`.
pub fn twisted_group_comodule(c: &TwoCocycle, field: Field) -> Result<ComoduleAlgebraData> {
    if c.field() != field {
        return Err(Error::FieldMismatch);
    }
    let report = check_two_cocycle(c);
    if !report.passed() {
        let v = report.failures().next().expect("a failure");
        return Err(Error::InvalidCocycle(format!(
            "{} fails{}",
            v.name,
            v.witness
                .as_ref()
                .map(|w| format!(" at {:?}", w.input))
                .unwrap_or_default()
        )));
    }
    let g = c.group();
    let n = g.order();
    let h = group_algebra(g, field);
    let mult = LinMap::from_fn(field, n, n * n, |r, col| {
        let (a, b) = (col / n, col % n);
        if g.mul(a, b) == r {
            c.value(a, b).clone()
        } else {
            field.zero()
        }
    });
    let algebra = AlgebraData::new(mult, basis_vector(field, n, g.identity()))?;
    let rho = LinMap::from_fn(field, n * n, n, |r, col| {
        if r == col * n + col {
            field.one()
        } else {
            field.zero()
        }
    });
    ComoduleAlgebraData::new(algebra, h, rho)
}

pub fn twisted_group_galois(c: &TwoCocycle, field: Field) -> Result<GaloisObjectData> {
    let d = twisted_group_comodule(c, field)?;
    make_galois(&d).map_err(|e| match e {
        Error::NotGalois(msg) => {
            Error::ImplementationFault(format!("twisted group algebra: {msg}"))
        }
        other => other,
    })
}
