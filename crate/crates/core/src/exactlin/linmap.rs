use std::fmt;

use super::field::{Field, Scalar};
use super::tensor::TensorIndex;

/// A vector of field elements in standard coordinates.
pub type Vector = Vec<Scalar>;

/// A linear map `k^dom -> k^cod` stored as a dense `cod x dom` matrix.
///
/// Entries are kept column-major: column `j` is the image of the `j`-th basis
/// vector, which is how every map in this crate is assembled and applied.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    field: Field,
    cod: usize,
    dom: usize,
    data: Vec<Scalar>,
}

impl LinMap {
    pub fn zeros(field: Field, cod: usize, dom: usize) -> Self {
        LinMap {
            field,
            cod,
            dom,
            data: vec![field.zero(); cod * dom],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        cod: usize,
        dom: usize,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(cod * dom);
        for c in 0..dom {
            for r in 0..cod {
                data.push(f(r, c));
            }
        }
        LinMap {
            field,
            cod,
            dom,
            data,
        }
    }

    /// Builds a map from the images of the basis vectors.
    pub fn from_columns(field: Field, cod: usize, columns: Vec<Vector>) -> Self {
        let dom = columns.len();
        let mut data = Vec::with_capacity(cod * dom);
        for col in columns {
            assert_eq!(col.len(), cod, "column length");
            data.extend(col);
        }
        LinMap {
            field,
            cod,
            dom,
            data,
        }
    }

    /// Builds a map from a row-major list of rows.
    pub fn from_rows(field: Field, rows: Vec<Vector>) -> Self {
        let cod = rows.len();
        let dom = rows.first().map_or(0, Vec::len);
        Self::from_fn(field, cod, dom, |r, c| rows[r][c].clone())
    }

    /// The map `k -> k^n` sending 1 to `v`.
    pub fn from_vector(field: Field, v: &[Scalar]) -> Self {
        Self::from_columns(field, v.len(), vec![v.to_vec()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dom_dim(&self) -> usize {
        self.dom
    }

    pub fn cod_dim(&self) -> usize {
        self.cod
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[c * self.cod + r]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[c * self.cod + r] = v;
    }

    pub fn column(&self, c: usize) -> &[Scalar] {
        &self.data[c * self.cod..(c + 1) * self.cod]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.dom).map(move |c| self.column(c))
    }

    pub fn row(&self, r: usize) -> Vector {
        (0..self.dom).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.cod == self.dom
            && (0..self.dom).all(|c| {
                (0..self.cod).all(|r| {
                    let v = self.get(r, c);
                    if r == c {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Applies the map to a coordinate vector.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.dom, "vector length");
        let mut out = vec![self.field.zero(); self.cod];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.column(c)) {
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> LinMap {
        assert_eq!(
            self.dom, other.cod,
            "composition of {}x{} after {}x{}",
            self.cod, self.dom, other.cod, other.dom
        );
        let columns = other.columns().map(|col| self.apply(col)).collect();
        LinMap::from_columns(self.field, self.cod, columns)
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &LinMap, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> LinMap {
        assert_eq!((self.cod, self.dom), (other.cod, other.dom), "shape");
        LinMap {
            field: self.field,
            cod: self.cod,
            dom: self.dom,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap {
            field: self.field,
            cod: self.cod,
            dom: self.dom,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::from_fn(self.field, self.dom, self.cod, |r, c| {
            self.get(c, r).clone()
        })
    }

    /// First entry (row, column) where the two maps differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<(usize, usize)> {
        assert_eq!((self.cod, self.dom), (other.cod, other.dom), "shape");
        let k = self
            .data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)?;
        Some((k % self.cod, k / self.cod))
    }

    /// Kronecker product `self ⊗ other` in the row-major tensor convention.
    pub fn kron(&self, other: &LinMap) -> LinMap {
        LinMap::from_fn(
            self.field,
            self.cod * other.cod,
            self.dom * other.dom,
            |r, c| {
                let (r1, r2) = (r / other.cod, r % other.cod);
                let (c1, c2) = (c / other.dom, c % other.dom);
                self.get(r1, c1) * other.get(r2, c2)
            },
        )
    }

    /// `(id_left ⊗ f ⊗ id_right) ∘ self`, without materialising the Kronecker product.
    pub fn then_local(&self, left: usize, f: &LinMap, right: usize) -> LinMap {
        assert_eq!(
            self.cod,
            left * f.dom * right,
            "then_local: {} != {}*{}*{}",
            self.cod,
            left,
            f.dom,
            right
        );
        let field = self.field;
        let out_cod = left * f.cod * right;
        // sparse columns of f
        let f_cols: Vec<Vec<(usize, &Scalar)>> = f
            .columns()
            .map(|col| {
                col.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        let mut data = vec![field.zero(); out_cod * self.dom];
        for c in 0..self.dom {
            let out = &mut data[c * out_cod..(c + 1) * out_cod];
            for (r, x) in self.column(c).iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let b = r % right;
                let i = (r / right) % f.dom;
                let a = r / (right * f.dom);
                for &(j, fv) in &f_cols[i] {
                    out[(a * f.cod + j) * right + b] += &(fv * x);
                }
            }
        }
        LinMap {
            field,
            cod: out_cod,
            dom: self.dom,
            data,
        }
    }

    /// `(f_1 ⊗ ... ⊗ f_r) ∘ self`, where `self` lands in `dom(f_1) ⊗ ... ⊗ dom(f_r)`.
    /// `Slot::Id(n)` stands for the identity of `k^n`.
    pub fn then_tensor(&self, factors: &[Slot<'_>]) -> LinMap {
        let mut dims_in: Vec<usize> = factors.iter().map(Slot::dom).collect();
        let mut current = self.clone();
        for (k, slot) in factors.iter().enumerate() {
            if let Slot::Map(f) = slot {
                let left: usize = dims_in[..k].iter().product();
                let right: usize = dims_in[k + 1..].iter().product();
                current = current.then_local(left, f, right);
                dims_in[k] = f.cod;
            }
        }
        current
    }

    /// Rearranges the tensor factors of the codomain: output factor `k` is input
    /// factor `perm[k]`.
    pub fn permute_cod(&self, dims: &[usize], perm: &[usize]) -> LinMap {
        let src = TensorIndex::new(dims);
        assert_eq!(src.size(), self.cod, "permute_cod dims");
        let dst_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let dst = TensorIndex::new(&dst_dims);
        let map: Vec<usize> = (0..self.cod)
            .map(|r| {
                let idx = src.unflatten(r);
                let new: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
                dst.flatten(&new)
            })
            .collect();
        let mut out = LinMap::zeros(self.field, self.cod, self.dom);
        for c in 0..self.dom {
            for (r, v) in self.column(c).iter().enumerate() {
                if !v.is_zero() {
                    out.set(map[r], c, v.clone());
                }
            }
        }
        out
    }

    /// Permutation of tensor factors as a map: output factor `k` is input factor `perm[k]`.
    pub fn factor_permutation(field: Field, dims: &[usize], perm: &[usize]) -> LinMap {
        let n = dims.iter().product();
        LinMap::identity(field, n).permute_cod(dims, perm)
    }
}

/// One tensor factor in [`LinMap::then_tensor`].
#[derive(Clone, Copy)]
pub enum Slot<'a> {
    Id(usize),
    Map(&'a LinMap),
}

impl Slot<'_> {
    fn dom(&self) -> usize {
        match self {
            Slot::Id(n) => *n,
            Slot::Map(f) => f.dom,
        }
    }
}

/// Kronecker product of a list of maps; the empty list gives `id_1`.
pub fn tensor_map(fs: &[&LinMap], field: Field) -> LinMap {
    fs.iter()
        .fold(LinMap::identity(field, 1), |acc, f| acc.kron(f))
}

/// `u ⊗ v` as a flat vector.
pub fn kron_vec(u: &[Scalar], v: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for a in u {
        for b in v {
            out.push(a * b);
        }
    }
    out
}

/// The `i`-th standard basis vector of `k^n`.
pub fn basis_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinMap {}x{} over {}", self.cod, self.dom, self.field)?;
        for r in 0..self.cod.min(32) {
            let row: Vec<String> = (0..self.dom.min(32))
                .map(|c| self.get(r, c).to_string())
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
