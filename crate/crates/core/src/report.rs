//! Check results with witnesses.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactlin::{LinMap, TensorIndex};

/// Where an identity between two linear maps fails: the basis tensor fed in,
/// the basis tensor of the output coordinate, and the two disagreeing values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub input: Vec<usize>,
    pub output: Vec<usize>,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "input {:?}, output coordinate {:?}: lhs = {}, rhs = {} (difference {})",
            self.input, self.output, self.lhs, self.rhs, self.difference
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub label: String,
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub verdicts: Vec<Verdict>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed)
    }

    pub fn get(&self, label: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.label == label)
    }

    /// The same verdicts with `prefix` prepended to every label.
    pub fn prefixed(mut self, prefix: &str) -> Report {
        for v in &mut self.verdicts {
            v.label.insert_str(0, prefix);
        }
        self
    }

    pub fn extend(&mut self, other: Report) {
        self.verdicts.extend(other.verdicts);
    }

    /// Records a pass/fail verdict that carries no witness.
    pub fn flag(&mut self, label: &str, name: &str, passed: bool, note: Option<String>) -> bool {
        self.verdicts.push(Verdict {
            label: label.into(),
            name: name.into(),
            passed,
            witness: None,
            note,
        });
        passed
    }

    /// Records whether `lhs == rhs` as linear maps. `dom` and `cod` are the tensor
    /// factor dimensions used to report the witness as basis-index tuples.
    pub fn maps_equal(
        &mut self,
        label: &str,
        name: &str,
        lhs: &LinMap,
        rhs: &LinMap,
        dom: &[usize],
        cod: &[usize],
    ) -> bool {
        let witness = map_witness(lhs, rhs, dom, cod);
        let passed = witness.is_none();
        self.verdicts.push(Verdict {
            label: label.into(),
            name: name.into(),
            passed,
            witness,
            note: None,
        });
        passed
    }
}

/// The first disagreement between two maps of the same shape, if any.
pub fn map_witness(lhs: &LinMap, rhs: &LinMap, dom: &[usize], cod: &[usize]) -> Option<Witness> {
    if (lhs.cod_dim(), lhs.dom_dim()) != (rhs.cod_dim(), rhs.dom_dim()) {
        return Some(Witness {
            input: vec![],
            output: vec![],
            lhs: format!("shape {}x{}", lhs.cod_dim(), lhs.dom_dim()),
            rhs: format!("shape {}x{}", rhs.cod_dim(), rhs.dom_dim()),
            difference: "shape mismatch".into(),
        });
    }
    let (r, c) = lhs.first_difference(rhs)?;
    let a = lhs.get(r, c);
    let b = rhs.get(r, c);
    Some(Witness {
        input: TensorIndex::new(dom).unflatten(c),
        output: TensorIndex::new(cod).unflatten(r),
        lhs: a.to_string(),
        rhs: b.to_string(),
        difference: (a - b).to_string(),
    })
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            write!(
                f,
                "{} {:<10} {}",
                if v.passed { "PASS" } else { "FAIL" },
                v.label,
                v.name
            )?;
            if let Some(note) = &v.note {
                write!(f, " [{note}]")?;
            }
            writeln!(f)?;
            if let Some(w) = &v.witness {
                writeln!(f, "     witness: {w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    #[test]
    fn witness_is_unflattened() {
        let q = Field::Rationals;
        let a = LinMap::identity(q, 4);
        let mut b = a.clone();
        b.set(3, 2, q.int(5));
        let mut r = Report::new();
        assert!(!r.maps_equal("x", "test", &a, &b, &[2, 2], &[2, 2]));
        let w = r.verdicts[0].witness.as_ref().unwrap();
        assert_eq!(w.input, vec![1, 0]);
        assert_eq!(w.output, vec![1, 1]);
        assert_eq!(w.difference, "-5");
        assert!(!r.passed());
    }
}
