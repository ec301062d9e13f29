//! The acceptance suite: ten criteria, one PASS/FAIL line each.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use htk_core::builtins::{self, BuiltinKind};
use htk_core::comodule::{
    check_gamma_identities, make_galois, ComoduleAlgebraData, GaloisObjectData,
};
use htk_core::constructions::{
    check_two_cocycle, group_algebra, twisted_group_comodule, GroupTable, TwoCocycle,
};
use htk_core::exactlin::LinMap;
use htk_core::format::{Document, ObjectEntry, StructureFile};
use htk_core::report::Report;
use htk_core::suite::verify_galois;
use htk_core::torsor::{
    check_reconstruction, check_scalar_lemma, check_theta_colinearity, check_theta_identities,
    check_torsor_axioms, derive_torsor, left_hopf_coinvariants,
};
use htk_core::ydribbon::{
    braided_commutativity_with, check_ribbon_property, check_yd, check_yd_module_algebra,
    mu_module, ribbon_theta, theta_chain_with,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const HTK: &str = env!("CARGO_BIN_EXE_htk");

fn galois_builtins() -> Vec<&'static str> {
    builtins::BUILTINS
        .iter()
        .filter(|b| b.kind == BuiltinKind::Galois)
        .map(|b| b.name)
        .collect()
}

fn galois(name: &str) -> (ComoduleAlgebraData, GaloisObjectData) {
    let d = builtins::galois(name).unwrap();
    let g = make_galois(&d).unwrap();
    (d, g)
}

fn require(r: &Report, labels: &[&str], context: &str) -> Result<(), String> {
    for label in labels {
        match r.get(label) {
            None => return Err(format!("{context}: no verdict {label}")),
            Some(v) if !v.passed => return Err(format!("{context}: {label} fails: {v:?}")),
            Some(_) => {}
        }
    }
    ensure!(
        r.passed(),
        "{context}: failures {:?}",
        r.failures().collect::<Vec<_>>()
    );
    Ok(())
}

fn gamma_suite() -> Outcome {
    let mut slowest = Duration::ZERO;
    for name in [
        "trivial_c2",
        "twisted_klein",
        "sweedler_regular",
        "taft3_f7",
    ] {
        let start = Instant::now();
        let d = builtins::galois(name).unwrap();
        let g = make_galois(&d).map_err(|e| format!("{name}: {e}"))?;
        let r = check_gamma_identities(&g);
        let elapsed = start.elapsed();
        require(&r, &["(1)", "(2)", "(3)", "(4)", "(5)", "(6)"], name)?;
        ensure!(elapsed < Duration::from_secs(1), "{name} took {elapsed:?}");
        slowest = slowest.max(elapsed);
    }
    Ok(format!("4 objects, slowest {slowest:.2?}"))
}

fn main_theorem() -> Outcome {
    let mut taft = Duration::ZERO;
    for name in galois_builtins() {
        let (_, g) = galois(name);
        let start = Instant::now();
        let t = derive_torsor(&g).map_err(|e| format!("{name}: {e}"))?;
        let r = check_torsor_axioms(&t);
        let elapsed = start.elapsed();
        require(
            &r,
            &[
                "(7)",
                "(8)",
                "(9)",
                "(10)",
                "(11)",
                "mu-mult",
                "mu-unit",
                "theta-mult",
                "theta-unit",
                "theta-bij",
            ],
            name,
        )?;
        if name == "taft3_f7" {
            taft = elapsed;
            ensure!(
                elapsed < Duration::from_secs(5),
                "taft3_f7 took {elapsed:?}"
            );
        }
    }
    Ok(format!(
        "{} objects, taft3_f7 in {taft:.2?}",
        galois_builtins().len()
    ))
}

fn scalar_lemma() -> Outcome {
    for name in galois_builtins() {
        let (_, g) = galois(name);
        require(&check_scalar_lemma(&g), &["(12)", "(13)"], name)?;
    }
    Ok(format!("{} objects", galois_builtins().len()))
}

fn theta_identities() -> Outcome {
    for name in galois_builtins() {
        let (_, g) = galois(name);
        let t = derive_torsor(&g).unwrap();
        require(&check_theta_identities(&g, &t), &["(14)", "(15)"], name)?;
    }
    let (d, g) = galois("sweedler_regular");
    let t = derive_torsor(&g).unwrap();
    let control = check_theta_colinearity(&g, &t, &LinMap::identity(d.field(), d.hopf_dim()));
    let v = control
        .get("(15)")
        .ok_or("control produced no (15) verdict")?;
    ensure!(
        !v.passed,
        "(15) still holds on sweedler_regular with S² replaced by id"
    );
    ensure!(
        v.witness.is_some(),
        "negative control failed without a witness"
    );
    Ok("all objects; S² → id control fails on sweedler_regular".into())
}

fn left_coinvariants() -> Outcome {
    for name in galois_builtins() {
        let (d, g) = galois(name);
        let (basis, r) = left_hopf_coinvariants(&g);
        require(&r, &["Hl-condition", "Hl-dim", "Hl-subalg"], name)?;
        ensure!(
            basis.len() == d.hopf_dim(),
            "{name}: dimension {} != {}",
            basis.len(),
            d.hopf_dim()
        );
    }
    Ok(format!("{} objects", galois_builtins().len()))
}

fn reconstruction() -> Outcome {
    for name in galois_builtins() {
        let (_, g) = galois(name);
        let t = derive_torsor(&g).unwrap();
        require(
            &check_reconstruction(&g, &t),
            &["rec-beta-x", "rec-beta"],
            name,
        )?;
    }
    Ok(format!("{} objects", galois_builtins().len()))
}

fn ribbon_suite() -> Outcome {
    for name in galois_builtins() {
        let (_, g) = galois(name);
        let m = mu_module(&g).unwrap();
        require(&check_yd(&m), &["yd-a", "yd-b", "yd-equiv"], name)?;
        require(
            &check_yd_module_algebra(&g, &m),
            &["modalg-mult", "modalg-unit"],
            name,
        )?;
        let r = braided_commutativity_with(&g, &m).map_err(|e| e.to_string())?;
        require(&r, &["braided-comm"], name)?;
        let r = check_ribbon_property(&m, &m).map_err(|e| e.to_string())?;
        require(&r, &["ribbon"], name)?;
        let (theta, theta_inv) = ribbon_theta(&m).map_err(|e| e.to_string())?;
        let t = derive_torsor(&g).unwrap();
        ensure!(
            &theta == t.theta(),
            "{name}: ribbon θ differs from torsor θ"
        );
        ensure!(theta.compose(&theta_inv).is_identity(), "{name}: θθ⁻¹ ≠ id");
        ensure!(theta_inv.compose(&theta).is_identity(), "{name}: θ⁻¹θ ≠ id");
        let r = theta_chain_with(&g, &m).map_err(|e| e.to_string())?;
        require(
            &r,
            &["chain-natural", "chain-ribbon", "chain-sigma", "chain-comm"],
            name,
        )?;
    }
    Ok(format!("{} objects", galois_builtins().len()))
}

/// Every dense position of every map in the file, as (object, map, index tuple).
fn positions(file: &StructureFile) -> Vec<(usize, &'static str, Vec<usize>)> {
    fn all(dims: &[usize]) -> Vec<Vec<usize>> {
        dims.iter().fold(vec![vec![]], |acc, &d| {
            acc.into_iter()
                .flat_map(|p| (0..d).map(move |i| [p.clone(), vec![i]].concat()))
                .collect()
        })
    }
    let mut out = Vec::new();
    for (k, o) in file.objects.iter().enumerate() {
        let maps: Vec<(&'static str, Vec<usize>)> = match o {
            ObjectEntry::Hopf(h) => {
                let n = h.dim;
                vec![
                    ("mult", vec![n, n, n]),
                    ("unit", vec![n]),
                    ("comult", vec![n, n, n]),
                    ("counit", vec![n]),
                    ("antipode", vec![n, n]),
                ]
            }
            ObjectEntry::ComoduleAlgebra(c) => {
                let n = c.dim;
                let h = match &file.objects[0] {
                    ObjectEntry::Hopf(h) => h.dim,
                    _ => unreachable!(),
                };
                vec![
                    ("mult", vec![n, n, n]),
                    ("unit", vec![n]),
                    ("coaction", vec![n, n, h]),
                ]
            }
            _ => vec![],
        };
        for (map, dims) in maps {
            out.extend(all(&dims).into_iter().map(|p| (k, map, p)));
        }
    }
    out
}

fn entries_mut<'a>(o: &'a mut ObjectEntry, map: &str) -> &'a mut Vec<Vec<serde_json::Number>> {
    match (o, map) {
        (ObjectEntry::Hopf(h), "mult") => &mut h.mult,
        (ObjectEntry::Hopf(h), "unit") => &mut h.unit,
        (ObjectEntry::Hopf(h), "comult") => &mut h.comult,
        (ObjectEntry::Hopf(h), "counit") => &mut h.counit,
        (ObjectEntry::Hopf(h), "antipode") => h.antipode.as_mut().unwrap(),
        (ObjectEntry::ComoduleAlgebra(c), "mult") => &mut c.mult,
        (ObjectEntry::ComoduleAlgebra(c), "unit") => &mut c.unit,
        (ObjectEntry::ComoduleAlgebra(c), "coaction") => &mut c.coaction,
        _ => unreachable!(),
    }
}

/// Adds 1 to the rational entry at `pos`.
fn bump(entries: &mut Vec<Vec<serde_json::Number>>, pos: &[usize]) {
    let k = pos.len();
    let at = entries.iter().position(|e| {
        e[..k]
            .iter()
            .map(|x| x.as_u64().unwrap() as usize)
            .eq(pos.iter().copied())
    });
    match at {
        Some(i) => {
            let num = entries[i][k].as_i64().unwrap();
            let den = entries[i][k + 1].as_i64().unwrap();
            if num + den == 0 {
                entries.remove(i);
            } else {
                entries[i][k] = (num + den).into();
            }
        }
        None => {
            let mut e: Vec<serde_json::Number> = pos.iter().map(|&x| (x as u64).into()).collect();
            e.push(1.into());
            e.push(1.into());
            entries.push(e);
        }
    }
}

/// Whether `T` is `k_σ C₂` for a 2-cocycle σ read off its multiplication, with `H = k C₂`.
fn is_twisted_group_algebra(file: &StructureFile) -> Result<bool, String> {
    let doc = Document::from_file(file).map_err(|e| e.to_string())?;
    let (d, _) = doc.comodule("T").map_err(|e| e.to_string())?;
    let f = d.field();
    let group = GroupTable::cyclic(2).unwrap();
    let n = group.order();
    if d.dim() != n || d.hopf != group_algebra(&group, f) {
        return Ok(false);
    }
    let mut values = vec![vec![f.one(); n]; n];
    for (a, row) in values.iter_mut().enumerate() {
        for (b, value) in row.iter_mut().enumerate() {
            let product = d.algebra.basis_product(a, b);
            let ab = group.mul(a, b);
            if product
                .iter()
                .enumerate()
                .any(|(i, x)| i != ab && !x.is_zero())
                || product[ab].is_zero()
            {
                return Ok(false);
            }
            *value = product[ab].clone();
        }
    }
    let Ok(c) = TwoCocycle::new(group, values) else {
        return Ok(false);
    };
    if !check_two_cocycle(&c).passed() {
        return Ok(false);
    }
    let oracle = twisted_group_comodule(&c, f).map_err(|e| e.to_string())?;
    Ok(oracle.algebra == d.algebra && oracle.coaction() == d.coaction())
}

fn run_htk(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(HTK).args(args).output().expect("htk runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn negative_controls() -> Outcome {
    let start = Instant::now();
    let base = builtins::structure_file("trivial_c2").unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corrupt.json");
    let targets = positions(&base);
    let mut silent = Vec::new();
    let mut valid = Vec::new();
    for (k, map, pos) in &targets {
        let mut file = base.clone();
        bump(entries_mut(&mut file.objects[*k], map), pos);
        std::fs::write(&path, file.to_json()).unwrap();
        let (code, stdout, stderr) =
            run_htk(&["check", path.to_str().unwrap(), "--object", "T", "--json"]);
        let name = format!("{}.{map}{pos:?}", file.objects[*k].name());
        if code == 0 {
            ensure!(
                is_twisted_group_algebra(&file)?,
                "{name}: passes but is not a known valid structure"
            );
            let (code, _, stderr) = run_htk(&["verify-paper", path.to_str().unwrap()]);
            ensure!(
                code == 0,
                "{name}: passes check but verify-paper exits {code}: {stderr}"
            );
            valid.push(name);
            continue;
        }
        ensure!(code == 1, "{name}: exit {code}: {stderr}");
        let doc: Value = serde_json::from_str(&stdout).unwrap();
        let witnessed = doc["verdicts"]
            .as_array()
            .unwrap()
            .iter()
            .any(|v| v["passed"] == false && v.get("witness").is_some());
        if !witnessed {
            silent.push(name);
        }
    }
    let elapsed = start.elapsed();
    ensure!(
        silent.is_empty(),
        "corruptions without a witnessed failure: {silent:?}"
    );
    ensure!(elapsed < Duration::from_secs(30), "fuzz took {elapsed:?}");
    Ok(format!(
        "{} corruptions: {} caught with a witness, {} yield a valid twisted group algebra {valid:?}; {elapsed:.2?}",
        targets.len(),
        targets.len() - valid.len(),
        valid.len()
    ))
}

fn cross_field() -> Outcome {
    for (q, p) in [
        ("trivial_c2", "trivial_c2_f5"),
        ("twisted_klein", "twisted_klein_f5"),
    ] {
        let rq = verify_galois(&builtins::galois(q).unwrap(), None, None).unwrap();
        let rp = verify_galois(&builtins::galois(p).unwrap(), None, None).unwrap();
        ensure!(rq.passed(), "{q} fails: {rq}");
        ensure!(rp.passed(), "{p} fails: {rp}");
        let lq: Vec<_> = rq.verdicts.iter().map(|v| (&v.label, v.passed)).collect();
        let lp: Vec<_> = rp.verdicts.iter().map(|v| (&v.label, v.passed)).collect();
        ensure!(lq == lp, "{q} and {p} produce different verdict lists");
    }
    Ok("trivial_c2 and twisted_klein agree over Q and F5".into())
}

fn verdicts(stdout: &str) -> Vec<Value> {
    let doc: Value = serde_json::from_str(stdout).unwrap();
    doc["verdicts"].as_array().unwrap().clone()
}

fn cli_contract() -> Outcome {
    let (code, stdout, stderr) = run_htk(&["verify-paper", "--builtin", "twisted_klein", "--json"]);
    ensure!(code == 0, "verify-paper exit {code}: {stderr}");
    let direct = verdicts(&stdout);
    for label in (1..=15).map(|i| format!("({i})")) {
        let v = direct.iter().find(|v| v["label"] == label.as_str());
        ensure!(
            v.is_some_and(|v| v["passed"] == true),
            "{label} missing or failing"
        );
    }

    let dir = tempfile::tempdir().unwrap();
    let mut compared = 0;
    for b in builtins::BUILTINS {
        let path = dir.path().join(format!("{}.json", b.name));
        let file = path.to_str().unwrap();
        let (code, _, stderr) = run_htk(&["export", "--builtin", b.name, "--out", file]);
        ensure!(code == 0, "export {}: {stderr}", b.name);
        let mut commands = vec!["check"];
        if b.kind == BuiltinKind::Galois && b.name != "taft3_f7" {
            commands.push("verify-paper");
        }
        for command in commands {
            let (c1, builtin_out, e1) = run_htk(&[command, "--builtin", b.name, "--json"]);
            let (c2, file_out, e2) = run_htk(&[command, file, "--json"]);
            ensure!(
                c1 == 0 && c2 == 0,
                "{command} {}: exits {c1}/{c2}: {e1}{e2}",
                b.name
            );
            ensure!(
                verdicts(&builtin_out) == verdicts(&file_out),
                "{command} {}: verdicts change after export/import",
                b.name
            );
            compared += 1;
        }
    }
    let torsor = dir.path().join("torsor.json");
    let (code, _, stderr) = run_htk(&[
        "derive-torsor",
        "--builtin",
        "sweedler_regular",
        "--out",
        torsor.to_str().unwrap(),
    ]);
    ensure!(code == 0, "derive-torsor: {stderr}");
    ensure!(
        reimported_torsor_passes(&torsor)?,
        "exported torsor fails its axioms"
    );
    Ok(format!(
        "labels (1)-(15) present; {compared} export/import comparisons identical"
    ))
}

fn reimported_torsor_passes(path: &Path) -> Result<bool, String> {
    let (code, stdout, stderr) = run_htk(&["check", path.to_str().unwrap(), "--json"]);
    ensure!(code == 0 || code == 1, "check torsor: {stderr}");
    Ok(code == 0 && verdicts(&stdout).iter().any(|v| v["label"] == "(7)"))
}

/// Bypasses the harness's output capture so the verdict lines always appear.
fn report(line: &str) {
    let mut out = std::io::stdout().lock();
    writeln!(out, "{line}").unwrap();
    out.flush().unwrap();
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("1  gamma identities (1)-(6)", gamma_suite),
        ("2  torsor axioms (7)-(11)", main_theorem),
        ("3  scalar lemma (12)(13)", scalar_lemma),
        ("4  theta identities (14)(15)", theta_identities),
        ("5  left Hopf coinvariants", left_coinvariants),
        ("6  reconstruction", reconstruction),
        ("7  Yetter-Drinfeld and ribbon suite", ribbon_suite),
        ("8  negative controls", negative_controls),
        ("9  cross-field robustness", cross_field),
        ("10 CLI contract", cli_contract),
    ];
    let mut failed = Vec::new();
    for (name, criterion) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(criterion)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => report(&format!("PASS criterion {name}: {detail} [{elapsed:.2?}]")),
            Err(why) => {
                report(&format!("FAIL criterion {name}: {why} [{elapsed:.2?}]"));
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
