//! The JSON structure-file format.
//!
//! Every linear map is stored sparsely as a list of entries
//! `[input indices…, output indices…, value]`, where the value is `num, den`
//! over Q and a reduced residue over F_p. Hopf objects are referenced by name.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::comodule::{ComoduleAlgebraData, GaloisObjectData};
use crate::error::{Error, Result};
use crate::exactlin::{Field, LinMap, Scalar, TensorIndex};
use crate::hopfcore::{AlgebraData, BialgebraData, CoalgebraData, HopfData};
use crate::torsor::TorsorData;
use crate::ydribbon::YDModuleData;

pub const FORMAT_VERSION: &str = "1";

/// Sparse entries of one map.
pub type Entries = Vec<Vec<Number>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub format_version: String,
    pub field: Field,
    pub objects: Vec<ObjectEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ObjectEntry {
    Hopf(HopfEntry),
    ComoduleAlgebra(ComoduleEntry),
    Torsor(TorsorEntry),
    YdModule(YdEntry),
}

impl ObjectEntry {
    pub fn name(&self) -> &str {
        match self {
            ObjectEntry::Hopf(e) => &e.name,
            ObjectEntry::ComoduleAlgebra(e) => &e.name,
            ObjectEntry::Torsor(e) => &e.name,
            ObjectEntry::YdModule(e) => &e.name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ObjectEntry::Hopf(_) => "hopf",
            ObjectEntry::ComoduleAlgebra(_) => "comodule_algebra",
            ObjectEntry::Torsor(_) => "torsor",
            ObjectEntry::YdModule(_) => "yd_module",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfEntry {
    pub name: String,
    pub dim: usize,
    pub mult: Entries,
    pub unit: Entries,
    pub comult: Entries,
    pub counit: Entries,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Entries>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleEntry {
    pub name: String,
    pub hopf: String,
    pub dim: usize,
    pub mult: Entries,
    pub unit: Entries,
    pub coaction: Entries,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Entries>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Entries>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorsorEntry {
    pub name: String,
    pub dim: usize,
    pub mult: Entries,
    pub unit: Entries,
    pub mu: Entries,
    pub theta: Entries,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdEntry {
    pub name: String,
    pub hopf: String,
    pub dim: usize,
    pub action: Entries,
    pub coaction: Entries,
}

/// A Hopf object as stored; the antipode is solved for on demand when absent.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfObject {
    pub bialgebra: BialgebraData,
    pub antipode: Option<LinMap>,
}

impl HopfObject {
    pub fn resolve(&self) -> Result<HopfData> {
        match &self.antipode {
            Some(s) => HopfData::with_antipode(self.bialgebra.clone(), s.clone()),
            None => HopfData::from_bialgebra(self.bialgebra.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleObject {
    pub algebra: AlgebraData,
    pub hopf: String,
    pub coaction: LinMap,
    pub beta: Option<LinMap>,
    pub gamma: Option<LinMap>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct YdObject {
    pub hopf: String,
    pub action: LinMap,
    pub coaction: LinMap,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    Hopf(HopfObject),
    ComoduleAlgebra(ComoduleObject),
    Torsor(TorsorData),
    YdModule(YdObject),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Hopf(_) => "hopf",
            Object::ComoduleAlgebra(_) => "comodule_algebra",
            Object::Torsor(_) => "torsor",
            Object::YdModule(_) => "yd_module",
        }
    }
}

/// A parsed and validated structure file.
#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub field: Field,
    pub objects: Vec<(String, Object)>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document> {
        let file: StructureFile = serde_json::from_str(text)
            .map_err(|e| Error::Format(format!("invalid structure file: {e}")))?;
        Document::from_file(&file)
    }

    pub fn from_file(file: &StructureFile) -> Result<Document> {
        if file.format_version != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "format_version: unsupported version {:?} (expected {FORMAT_VERSION:?})",
                file.format_version
            )));
        }
        let field = match file.field {
            Field::Prime { p } => {
                Field::prime(p).map_err(|e| Error::Format(format!("field: {e}")))?
            }
            f => f,
        };
        let mut seen: HashMap<&str, (usize, &'static str, usize)> = HashMap::new();
        let mut objects = Vec::with_capacity(file.objects.len());
        for (i, entry) in file.objects.iter().enumerate() {
            let name = entry.name();
            let path = format!("objects[{i}] ({name:?})");
            if let Some((j, _, _)) = seen.get(name) {
                return Err(Error::Format(format!(
                    "{path}: duplicate name, first used by objects[{j}]"
                )));
            }
            let hopf_dim = |hopf: &str| -> Result<usize> {
                match seen.get(hopf) {
                    Some((_, "hopf", d)) => Ok(*d),
                    Some((j, kind, _)) => Err(Error::Format(format!(
                        "{path}.hopf: {hopf:?} refers to objects[{j}], a {kind}, not a hopf object"
                    ))),
                    None => Err(Error::Format(format!(
                        "{path}.hopf: no hopf object named {hopf:?} precedes this entry"
                    ))),
                }
            };
            let ctx = Ctx { field, path: &path };
            let (object, dim) = match entry {
                ObjectEntry::Hopf(e) => (Object::Hopf(ctx.hopf(e)?), e.dim),
                ObjectEntry::ComoduleAlgebra(e) => {
                    let h = hopf_dim(&e.hopf)?;
                    (Object::ComoduleAlgebra(ctx.comodule(e, h)?), e.dim)
                }
                ObjectEntry::Torsor(e) => (Object::Torsor(ctx.torsor(e)?), e.dim),
                ObjectEntry::YdModule(e) => {
                    let h = hopf_dim(&e.hopf)?;
                    (Object::YdModule(ctx.yd(e, h)?), e.dim)
                }
            };
            seen.insert(name, (i, entry.kind(), dim));
            objects.push((name.to_string(), object));
        }
        Ok(Document { field, objects })
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.objects.iter().map(|(n, _)| n.as_str())
    }

    pub fn hopf(&self, name: &str) -> Result<HopfData> {
        match self.get(name) {
            Some(Object::Hopf(h)) => h.resolve(),
            _ => Err(Error::Format(format!("no hopf object named {name:?}"))),
        }
    }

    pub fn comodule(&self, name: &str) -> Result<(ComoduleAlgebraData, &ComoduleObject)> {
        match self.get(name) {
            Some(Object::ComoduleAlgebra(c)) => {
                let h = self.hopf(&c.hopf)?;
                Ok((
                    ComoduleAlgebraData::new(c.algebra.clone(), h, c.coaction.clone())?,
                    c,
                ))
            }
            _ => Err(Error::Format(format!(
                "no comodule_algebra object named {name:?}"
            ))),
        }
    }

    pub fn yd_module(&self, name: &str) -> Result<YDModuleData> {
        match self.get(name) {
            Some(Object::YdModule(y)) => {
                let h = self.hopf(&y.hopf)?;
                YDModuleData::new(h, y.action.clone(), y.coaction.clone())
            }
            _ => Err(Error::Format(format!("no yd_module object named {name:?}"))),
        }
    }
}

struct Ctx<'a> {
    field: Field,
    path: &'a str,
}

impl Ctx<'_> {
    fn map(&self, key: &str, entries: &Entries, dom: &[usize], cod: &[usize]) -> Result<LinMap> {
        parse_entries(self.field, entries, dom, cod)
            .map_err(|e| Error::Format(format!("{}.{key}{e}", self.path)))
    }

    fn algebra(&self, dim: usize, mult: &Entries, unit: &Entries) -> Result<AlgebraData> {
        if dim == 0 {
            return Err(Error::Format(format!(
                "{}.dim: must be positive",
                self.path
            )));
        }
        let m = self.map("mult", mult, &[dim, dim], &[dim])?;
        let u = self.map("unit", unit, &[], &[dim])?;
        AlgebraData::new(m, u.column(0).to_vec())
    }

    fn hopf(&self, e: &HopfEntry) -> Result<HopfObject> {
        let n = e.dim;
        let algebra = self.algebra(n, &e.mult, &e.unit)?;
        let comult = self.map("comult", &e.comult, &[n], &[n, n])?;
        let counit = self.map("counit", &e.counit, &[n], &[])?;
        let bialgebra = BialgebraData::new(algebra, CoalgebraData::new(comult, counit)?)?;
        let antipode = e
            .antipode
            .as_ref()
            .map(|s| self.map("antipode", s, &[n], &[n]))
            .transpose()?;
        Ok(HopfObject {
            bialgebra,
            antipode,
        })
    }

    fn comodule(&self, e: &ComoduleEntry, h: usize) -> Result<ComoduleObject> {
        let n = e.dim;
        let algebra = self.algebra(n, &e.mult, &e.unit)?;
        Ok(ComoduleObject {
            algebra,
            hopf: e.hopf.clone(),
            coaction: self.map("coaction", &e.coaction, &[n], &[n, h])?,
            beta: e
                .beta
                .as_ref()
                .map(|b| self.map("beta", b, &[n, n], &[n, h]))
                .transpose()?,
            gamma: e
                .gamma
                .as_ref()
                .map(|g| self.map("gamma", g, &[h], &[n, n]))
                .transpose()?,
        })
    }

    fn torsor(&self, e: &TorsorEntry) -> Result<TorsorData> {
        let n = e.dim;
        let algebra = self.algebra(n, &e.mult, &e.unit)?;
        let mu = self.map("mu", &e.mu, &[n], &[n, n, n])?;
        let theta = self.map("theta", &e.theta, &[n], &[n])?;
        TorsorData::new(algebra, mu, theta)
    }

    fn yd(&self, e: &YdEntry, h: usize) -> Result<YdObject> {
        let d = e.dim;
        if d == 0 {
            return Err(Error::Format(format!(
                "{}.dim: must be positive",
                self.path
            )));
        }
        Ok(YdObject {
            hopf: e.hopf.clone(),
            action: self.map("action", &e.action, &[d, h], &[d])?,
            coaction: self.map("coaction", &e.coaction, &[d], &[d, h])?,
        })
    }
}

fn to_bigint(n: &Number) -> Option<BigInt> {
    n.to_string().parse().ok()
}

fn to_index(n: &Number) -> Option<usize> {
    n.as_u64().and_then(|v| usize::try_from(v).ok())
}

/// Error messages start with the entry location, to be appended to the map's path.
fn parse_entries(
    field: Field,
    entries: &Entries,
    dom: &[usize],
    cod: &[usize],
) -> Result<LinMap, String> {
    let arity = dom.len() + cod.len();
    let width = arity + if field == Field::Rationals { 2 } else { 1 };
    let dims: Vec<usize> = dom.iter().chain(cod).copied().collect();
    let (di, ci) = (TensorIndex::new(dom), TensorIndex::new(cod));
    let mut map = LinMap::zeros(field, ci.size(), di.size());
    let mut filled = vec![false; ci.size() * di.size()];
    for (k, entry) in entries.iter().enumerate() {
        let at = |msg: String| format!("[{k}]: {msg}");
        if entry.len() != width {
            return Err(at(format!(
                "expected {width} numbers ({arity} indices and the value), found {}",
                entry.len()
            )));
        }
        let mut idx = Vec::with_capacity(arity);
        for (slot, (n, &bound)) in entry[..arity].iter().zip(&dims).enumerate() {
            match to_index(n) {
                Some(i) if i < bound => idx.push(i),
                _ => {
                    return Err(at(format!(
                        "index {slot} is {n}, expected an integer in 0..{bound}"
                    )))
                }
            }
        }
        let value = match field {
            Field::Rationals => {
                let (num, den) = match (to_bigint(&entry[arity]), to_bigint(&entry[arity + 1])) {
                    (Some(a), Some(b)) => (a, b),
                    _ => return Err(at("numerator and denominator must be integers".into())),
                };
                field
                    .ratio(&num, &den)
                    .map_err(|_| at("zero denominator".into()))?
            }
            Field::Prime { p } => match entry[arity].as_u64() {
                Some(r) if r < p => field.int(r as i64),
                _ => {
                    return Err(at(format!(
                        "residue {} is not reduced modulo {p}",
                        entry[arity]
                    )))
                }
            },
        };
        let c = di.flatten(&idx[..dom.len()]);
        let r = ci.flatten(&idx[dom.len()..]);
        if std::mem::replace(&mut filled[c * ci.size() + r], true) {
            return Err(at(format!("duplicate entry for indices {idx:?}")));
        }
        map.set(r, c, value);
    }
    Ok(map)
}

fn number(s: &str) -> Number {
    serde_json::from_str(s).expect("integer literal")
}

fn scalar_numbers(s: &Scalar) -> Vec<Number> {
    match s {
        Scalar::Rat(_) => {
            let (n, d) = s.to_ratio();
            vec![number(&n.to_string()), number(&d.to_string())]
        }
        Scalar::Mod { value, .. } => vec![Number::from(*value)],
    }
}

/// Sparse entries of `m`, in column-major order.
pub fn export_entries(m: &LinMap, dom: &[usize], cod: &[usize]) -> Entries {
    let (di, ci) = (TensorIndex::new(dom), TensorIndex::new(cod));
    let mut out = Vec::new();
    for c in 0..m.dom_dim() {
        for (r, v) in m.column(c).iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let mut e: Vec<Number> = di
                .unflatten(c)
                .into_iter()
                .map(|i| Number::from(i as u64))
                .collect();
            e.extend(ci.unflatten(r).into_iter().map(|i| Number::from(i as u64)));
            e.extend(scalar_numbers(v));
            out.push(e);
        }
    }
    out
}

fn unit_entries(a: &AlgebraData) -> Entries {
    export_entries(&a.unit_map(), &[], &[a.dim()])
}

pub fn export_hopf(name: &str, h: &HopfData) -> ObjectEntry {
    let n = h.dim();
    ObjectEntry::Hopf(HopfEntry {
        name: name.into(),
        dim: n,
        mult: export_entries(h.mult(), &[n, n], &[n]),
        unit: unit_entries(&h.algebra),
        comult: export_entries(h.comult(), &[n], &[n, n]),
        counit: export_entries(h.counit(), &[n], &[]),
        antipode: Some(export_entries(h.antipode(), &[n], &[n])),
    })
}

/// A comodule algebra; with `galois` set, its `β` and `γ` are included.
pub fn export_comodule(
    name: &str,
    hopf_name: &str,
    d: &ComoduleAlgebraData,
    galois: Option<&GaloisObjectData>,
) -> ObjectEntry {
    let (n, h) = (d.dim(), d.hopf_dim());
    ObjectEntry::ComoduleAlgebra(ComoduleEntry {
        name: name.into(),
        hopf: hopf_name.into(),
        dim: n,
        mult: export_entries(d.algebra.mult(), &[n, n], &[n]),
        unit: unit_entries(&d.algebra),
        coaction: export_entries(d.coaction(), &[n], &[n, h]),
        beta: galois.map(|g| export_entries(g.beta(), &[n, n], &[n, h])),
        gamma: galois.map(|g| export_entries(g.gamma(), &[h], &[n, n])),
    })
}

pub fn export_torsor(name: &str, t: &TorsorData) -> ObjectEntry {
    let n = t.dim();
    ObjectEntry::Torsor(TorsorEntry {
        name: name.into(),
        dim: n,
        mult: export_entries(t.algebra.mult(), &[n, n], &[n]),
        unit: unit_entries(&t.algebra),
        mu: export_entries(t.mu(), &[n], &[n, n, n]),
        theta: export_entries(t.theta(), &[n], &[n]),
    })
}

pub fn export_yd(name: &str, hopf_name: &str, m: &YDModuleData) -> ObjectEntry {
    let (d, h) = (m.dim(), m.hopf.dim());
    ObjectEntry::YdModule(YdEntry {
        name: name.into(),
        hopf: hopf_name.into(),
        dim: d,
        action: export_entries(m.action(), &[d, h], &[d]),
        coaction: export_entries(m.coaction(), &[d], &[d, h]),
    })
}

impl StructureFile {
    pub fn new(field: Field, objects: Vec<ObjectEntry>) -> Self {
        StructureFile {
            format_version: FORMAT_VERSION.into(),
            field,
            objects,
        }
    }

    /// Pretty JSON with each structure-constant entry on one line.
    pub fn to_json(&self) -> String {
        collapse_number_arrays(
            &serde_json::to_string_pretty(self).expect("structure files serialize"),
        )
    }
}

fn collapse_number_arrays(pretty: &str) -> String {
    let lines: Vec<&str> = pretty.lines().collect();
    let mut out = String::with_capacity(pretty.len());
    let mut i = 0;
    while i < lines.len() {
        let line = lines[i];
        if line.ends_with('[') {
            let numbers: Vec<&str> = lines[i + 1..]
                .iter()
                .map(|l| l.trim().trim_end_matches(','))
                .take_while(|l| l.parse::<f64>().is_ok())
                .collect();
            let close = lines.get(i + 1 + numbers.len()).map(|l| l.trim());
            if !numbers.is_empty() && matches!(close, Some("]" | "],")) {
                out.push_str(line);
                out.push_str(&numbers.join(", "));
                out.push_str(close.unwrap());
                out.push('\n');
                i += numbers.len() + 2;
                continue;
            }
        }
        out.push_str(line);
        out.push('\n');
        i += 1;
    }
    out.pop();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        group_algebra, sweedler_h4, taft_algebra, trivial_galois, GroupTable,
    };
    use crate::torsor::derive_torsor;
    use crate::ydribbon::mu_action;

    fn c2_text() -> &'static str {
        r#"{
          "format_version": "1",
          "field": {"kind": "Q"},
          "objects": [
            {"type": "hopf", "name": "H", "dim": 2,
             "mult": [[0,0,0,1,1],[0,1,1,1,1],[1,0,1,1,1],[1,1,0,1,1]],
             "unit": [[0,1,1]],
             "comult": [[0,0,0,1,1],[1,1,1,1,1]],
             "counit": [[0,1,1],[1,1,1]]},
            {"type": "comodule_algebra", "name": "T", "hopf": "H", "dim": 2,
             "mult": [[0,0,0,1,1],[0,1,1,1,1],[1,0,1,1,1],[1,1,0,1,1]],
             "unit": [[0,1,1]],
             "coaction": [[0,0,0,1,1],[1,1,1,1,1]]}
          ]
        }"#
    }

    #[test]
    fn parses_handwritten_c2() {
        let doc = Document::parse(c2_text()).unwrap();
        let h = doc.hopf("H").unwrap();
        assert_eq!(
            h,
            group_algebra(&GroupTable::cyclic(2).unwrap(), Field::Rationals)
        );
        let (t, _) = doc.comodule("T").unwrap();
        assert_eq!(t.coaction(), h.comult());
    }

    fn err(text: &str) -> String {
        match Document::parse(text) {
            Err(Error::Format(m)) => m,
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn diagnostics_carry_locations() {
        let bad_index = c2_text().replace("[1,1,0,1,1]]", "[1,1,2,1,1]]");
        let m = err(&bad_index);
        assert!(m.contains("objects[0] (\"H\").mult[3]"), "{m}");
        let zero_den = c2_text().replace(
            r#""unit": [[0,1,1]],
             "comult""#,
            r#""unit": [[0,1,0]],
             "comult""#,
        );
        assert!(err(&zero_den).contains("zero denominator"));
        let dangling = c2_text().replace(r#""hopf": "H""#, r#""hopf": "K""#);
        assert!(err(&dangling).contains("no hopf object named \"K\""));
        let syntax = err("{\"format_version\": ");
        assert!(syntax.contains("line 1"), "{syntax}");
        let dup = c2_text().replace(r#""name": "T""#, r#""name": "H""#);
        assert!(err(&dup).contains("duplicate name"));
    }

    #[test]
    fn residues_must_be_reduced() {
        let text = r#"{"format_version": "1", "field": {"kind": "Fp", "p": 5},
          "objects": [{"type": "hopf", "name": "k", "dim": 1, "mult": [[0,0,0,6]],
          "unit": [[0,1]], "comult": [[0,0,0,1]], "counit": [[0,1]]}]}"#;
        assert!(err(text).contains("not reduced modulo 5"));
        let composite = text.replace("\"p\": 5", "\"p\": 6");
        assert!(err(&composite).contains("field"));
    }

    #[test]
    fn big_rationals_survive() {
        let text = r#"{"format_version": "1", "field": {"kind": "Q"},
          "objects": [{"type": "hopf", "name": "k", "dim": 1,
          "mult": [[0,0,0,123456789012345678901234567890,123456789012345678901234567890]],
          "unit": [[0,1,1]], "comult": [[0,0,0,1,1]], "counit": [[0,1,1]]}]}"#;
        let doc = Document::parse(text).unwrap();
        assert!(doc.hopf("k").unwrap().mult().is_identity());
    }

    #[test]
    fn round_trips() {
        for h in [
            sweedler_h4(Field::Rationals).unwrap(),
            taft_algebra(3, Field::prime(7).unwrap()).unwrap(),
        ] {
            let g = trivial_galois(&h).unwrap();
            let t = derive_torsor(&g).unwrap();
            let y = mu_action(&g).unwrap();
            let file = StructureFile::new(
                h.field(),
                vec![
                    export_hopf("H", &h),
                    export_comodule("T", "H", &g.base, Some(&g)),
                    export_torsor("tor", &t),
                    export_yd("V", "H", &y),
                ],
            );
            let doc = Document::parse(&file.to_json()).unwrap();
            assert_eq!(doc.hopf("H").unwrap(), h);
            let (base, raw) = doc.comodule("T").unwrap();
            assert_eq!(base, g.base);
            assert_eq!(raw.gamma.as_ref(), Some(g.gamma()));
            assert_eq!(doc.get("tor"), Some(&Object::Torsor(t)));
            assert_eq!(doc.yd_module("V").unwrap(), y);
        }
    }
}
