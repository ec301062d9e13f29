//! Named example structures, each available as a structure file.

use crate::comodule::ComoduleAlgebraData;
use crate::constructions::{
    dual_group_algebra, group_algebra, klein_sign_cocycle, sweedler_h4, taft_algebra,
    trivial_galois, twisted_group_comodule, GroupTable,
};
use crate::error::Result;
use crate::exactlin::Field;
use crate::format::{export_comodule, export_hopf, export_yd, StructureFile};
use crate::hopfcore::HopfData;
use crate::ydribbon::{mu_action, trivial_yd, YDModuleData};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinKind {
    /// A Galois object `T` (object name `T`) over a Hopf algebra `H`.
    Galois,
    /// A Hopf algebra, object name `H`.
    Hopf,
    /// A Yetter-Drinfeld module `V` over `H`.
    YdModule,
}

impl BuiltinKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BuiltinKind::Galois => "galois",
            BuiltinKind::Hopf => "hopf",
            BuiltinKind::YdModule => "yd_module",
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Builtin {
    pub name: &'static str,
    pub kind: BuiltinKind,
    pub description: &'static str,
}

pub const BUILTINS: &[Builtin] = &[
    Builtin {
        name: "trivial_c2",
        kind: BuiltinKind::Galois,
        description: "Q[C2] as a Galois object over itself",
    },
    Builtin {
        name: "trivial_c2_f5",
        kind: BuiltinKind::Galois,
        description: "F5[C2] as a Galois object over itself",
    },
    Builtin {
        name: "twisted_klein",
        kind: BuiltinKind::Galois,
        description: "Q[C2xC2] twisted by the cocycle (-1)^(bc), over Q[C2xC2]",
    },
    Builtin {
        name: "twisted_klein_f5",
        kind: BuiltinKind::Galois,
        description: "twisted_klein over F5",
    },
    Builtin {
        name: "sweedler_regular",
        kind: BuiltinKind::Galois,
        description: "Sweedler's 4-dimensional Hopf algebra over Q as a Galois object over itself",
    },
    Builtin {
        name: "taft3_f7",
        kind: BuiltinKind::Galois,
        description: "9-dimensional Taft algebra over F7 (q = 2) as a Galois object over itself",
    },
    Builtin {
        name: "dual_klein_regular",
        kind: BuiltinKind::Galois,
        description: "functions on C2xC2 over Q as a Galois object over itself",
    },
    Builtin {
        name: "s3_regular_f5",
        kind: BuiltinKind::Galois,
        description: "F5[S3] as a Galois object over itself",
    },
    Builtin {
        name: "c2",
        kind: BuiltinKind::Hopf,
        description: "group algebra Q[C2]",
    },
    Builtin {
        name: "sweedler_h4",
        kind: BuiltinKind::Hopf,
        description: "Sweedler's Hopf algebra over Q",
    },
    Builtin {
        name: "dual_klein",
        kind: BuiltinKind::Hopf,
        description: "functions on C2xC2 over Q",
    },
    Builtin {
        name: "s3_f5",
        kind: BuiltinKind::Hopf,
        description: "group algebra F5[S3]",
    },
    Builtin {
        name: "taft_h9_f7",
        kind: BuiltinKind::Hopf,
        description: "Taft algebra of dimension 9 over F7",
    },
    Builtin {
        name: "mu_sweedler",
        kind: BuiltinKind::YdModule,
        description:
            "Sweedler's Hopf algebra with its Miyashita-Ulbrich action and regular coaction",
    },
    Builtin {
        name: "trivial_yd_c2",
        kind: BuiltinKind::YdModule,
        description: "the unit Yetter-Drinfeld module over Q[C2]",
    },
];

pub fn find(name: &str) -> Option<&'static Builtin> {
    BUILTINS.iter().find(|b| b.name == name)
}

/// Names containing `filter`, in registry order.
pub fn list(filter: Option<&str>) -> Vec<&'static Builtin> {
    BUILTINS
        .iter()
        .filter(|b| filter.is_none_or(|f| b.name.contains(f)))
        .collect()
}

fn q() -> Field {
    Field::Rationals
}

fn f5() -> Field {
    Field::prime(5).expect("5 is prime")
}

fn regular(h: HopfData) -> Result<ComoduleAlgebraData> {
    let rho = h.comult().clone();
    ComoduleAlgebraData::new(h.algebra.clone(), h, rho)
}

fn unknown(name: &str) -> crate::Error {
    crate::Error::Format(format!("unknown builtin {name:?}"))
}

pub fn hopf(name: &str) -> Result<HopfData> {
    match name {
        "c2" => Ok(group_algebra(&GroupTable::cyclic(2)?, q())),
        "sweedler_h4" => sweedler_h4(q()),
        "dual_klein" => Ok(dual_group_algebra(&GroupTable::klein(), q())),
        "s3_f5" => Ok(group_algebra(&GroupTable::symmetric(3)?, f5())),
        "taft_h9_f7" => taft_algebra(3, Field::prime(7)?),
        _ => Err(unknown(name)),
    }
}

pub fn galois(name: &str) -> Result<ComoduleAlgebraData> {
    match name {
        "trivial_c2" => regular(hopf("c2")?),
        "trivial_c2_f5" => regular(group_algebra(&GroupTable::cyclic(2)?, f5())),
        "twisted_klein" => twisted_group_comodule(&klein_sign_cocycle(q())?, q()),
        "twisted_klein_f5" => twisted_group_comodule(&klein_sign_cocycle(f5())?, f5()),
        "sweedler_regular" => regular(hopf("sweedler_h4")?),
        "taft3_f7" => regular(hopf("taft_h9_f7")?),
        "dual_klein_regular" => regular(hopf("dual_klein")?),
        "s3_regular_f5" => regular(hopf("s3_f5")?),
        _ => Err(unknown(name)),
    }
}

pub fn yd_module(name: &str) -> Result<YDModuleData> {
    match name {
        "mu_sweedler" => mu_action(&trivial_galois(&hopf("sweedler_h4")?)?),
        "trivial_yd_c2" => Ok(trivial_yd(&hopf("c2")?)),
        _ => Err(unknown(name)),
    }
}

/// The builtin as a structure file.
pub fn structure_file(name: &str) -> Result<StructureFile> {
    let b = find(name).ok_or_else(|| unknown(name))?;
    Ok(match b.kind {
        BuiltinKind::Hopf => {
            let h = hopf(name)?;
            StructureFile::new(h.field(), vec![export_hopf("H", &h)])
        }
        BuiltinKind::Galois => {
            let d = galois(name)?;
            StructureFile::new(
                d.field(),
                vec![
                    export_hopf("H", &d.hopf),
                    export_comodule("T", "H", &d, None),
                ],
            )
        }
        BuiltinKind::YdModule => {
            let m = yd_module(name)?;
            StructureFile::new(
                m.hopf.field(),
                vec![export_hopf("H", &m.hopf), export_yd("V", "H", &m)],
            )
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::Document;

    #[test]
    fn registry_is_consistent() {
        for b in BUILTINS {
            let file = structure_file(b.name).unwrap();
            let doc = Document::parse(&file.to_json()).unwrap();
            assert!(!doc.objects.is_empty(), "{}", b.name);
        }
        assert!(structure_file("nope").is_err());
    }

    #[test]
    fn filtering() {
        assert_eq!(list(None).len(), BUILTINS.len());
        assert_eq!(list(Some("")).len(), BUILTINS.len());
        let klein: Vec<_> = list(Some("klein")).iter().map(|b| b.name).collect();
        assert_eq!(
            klein,
            [
                "twisted_klein",
                "twisted_klein_f5",
                "dual_klein_regular",
                "dual_klein"
            ]
        );
    }
}
