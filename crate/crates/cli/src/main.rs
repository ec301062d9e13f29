use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use htk_core::builtins::{self, BuiltinKind};
use htk_core::comodule::make_galois;
use htk_core::format::{export_comodule, export_torsor, Document, StructureFile};
use htk_core::hopfcore::check_algebra;
use htk_core::report::Report;
use htk_core::suite::{check_object, is_mathematical, verify_document, ReportDocument};
use htk_core::torsor::{check_torsor_axioms, derive_torsor};

const EXIT_FAIL: u8 = 1;
const EXIT_INPUT: u8 = 2;

/// Exact verification of Hopf-Galois objects, quantum torsors and their ribbon structure.
#[derive(Parser)]
#[command(name = "htk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the defining laws of one object of a structure file.
    Check(InputArgs),
    /// Build the torsor of a Galois object, check its axioms and write it out.
    DeriveTorsor(InputArgs),
    /// Run every identity of the theory on a Galois object.
    VerifyPaper(InputArgs),
    /// List the builtin structures whose names contain FILTER.
    ListBuiltins {
        filter: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Write a builtin as a structure file.
    Export {
        #[arg(long, value_name = "NAME")]
        builtin: String,
        /// Include the canonical map and translation map of a Galois builtin.
        #[arg(long)]
        with_maps: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Structure file to read.
    #[arg(
        value_name = "FILE",
        required_unless_present = "builtin",
        conflicts_with = "builtin"
    )]
    file: Option<PathBuf>,
    /// Use a builtin structure instead of a file.
    #[arg(long, value_name = "NAME")]
    builtin: Option<String>,
    /// Object to act on; defaults to the only eligible one.
    #[arg(long, value_name = "NAME")]
    object: Option<String>,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
    /// Also write the output document to FILE.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

struct Input {
    bytes: Vec<u8>,
    doc: Document,
}

fn suggest<'a>(name: &str, candidates: impl IntoIterator<Item = &'a str>) -> String {
    let best = candidates
        .into_iter()
        .map(|c| (strsim::jaro_winkler(name, c), c))
        .max_by(|a, b| a.0.total_cmp(&b.0));
    match best {
        Some((score, c)) if score >= 0.8 => format!("; did you mean {c:?}?"),
        _ => String::new(),
    }
}

fn unknown_builtin(name: &str) -> anyhow::Error {
    anyhow!(
        "unknown builtin {name:?}{} (see `htk list-builtins`)",
        suggest(name, builtins::BUILTINS.iter().map(|b| b.name))
    )
}

fn load(args: &InputArgs) -> anyhow::Result<Input> {
    let bytes = match (&args.builtin, &args.file) {
        (Some(name), _) => {
            builtins::find(name).ok_or_else(|| unknown_builtin(name))?;
            builtins::structure_file(name)?.to_json().into_bytes()
        }
        (None, Some(path)) => {
            fs::read(path).with_context(|| format!("cannot read {}", path.display()))?
        }
        (None, None) => bail!("give a structure file or --builtin NAME"),
    };
    let text = std::str::from_utf8(&bytes).context("structure file is not UTF-8")?;
    let doc = Document::parse(text)?;
    Ok(Input { bytes, doc })
}

/// The requested object, or the only object whose kind is in `kinds`.
fn select(doc: &Document, requested: Option<&str>, kinds: &[&str]) -> anyhow::Result<String> {
    if let Some(name) = requested {
        let Some(object) = doc.get(name) else {
            bail!("no object named {name:?}{}", suggest(name, doc.names()));
        };
        if !kinds.contains(&object.kind()) {
            bail!(
                "object {name:?} is a {}, expected {}",
                object.kind(),
                kinds.join(" or ")
            );
        }
        return Ok(name.to_string());
    }
    let eligible: Vec<&str> = doc
        .objects
        .iter()
        .filter(|(_, o)| kinds.contains(&o.kind()))
        .map(|(n, _)| n.as_str())
        .collect();
    match eligible.as_slice() {
        [one] => Ok(one.to_string()),
        [] => bail!("the input has no {} object", kinds.join(" or ")),
        many => bail!(
            "several eligible objects ({}); choose one with --object",
            many.join(", ")
        ),
    }
}

/// The default for `check`: the only non-Hopf object, or the only object.
fn select_for_check(doc: &Document, requested: Option<&str>) -> anyhow::Result<String> {
    let all = ["hopf", "comodule_algebra", "torsor", "yd_module"];
    if requested.is_some() || doc.objects.len() == 1 {
        return select(doc, requested, &all);
    }
    select(doc, None, &all[1..])
}

fn emit(out: &mut String, args: &InputArgs, doc: &ReportDocument) -> anyhow::Result<()> {
    let json = serde_json::to_string_pretty(doc)?;
    if args.json {
        writeln!(out, "{json}")?;
    } else {
        print_text(out, doc)?;
    }
    if let Some(path) = &args.out {
        fs::write(path, json + "\n").with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(())
}

fn print_text(out: &mut String, doc: &ReportDocument) -> std::fmt::Result {
    writeln!(
        out,
        "{} {}: object {:?} over {} ({})",
        doc.tool, doc.command, doc.object, doc.field, doc.input_digest
    )?;
    write!(out, "{}", doc.report())?;
    let failed = doc.verdicts.iter().filter(|v| !v.passed).count();
    if failed == 0 {
        writeln!(out, "PASS: all {} checks hold", doc.verdicts.len())?;
    } else {
        writeln!(out, "FAIL: {failed} of {} checks fail", doc.verdicts.len())?;
    }
    Ok(())
}

fn exit_for(passed: bool) -> u8 {
    if passed {
        0
    } else {
        EXIT_FAIL
    }
}

/// Turns a mathematical error into a failing verdict; other errors are input errors.
fn report_or_error(
    res: htk_core::Result<Report>,
    label: &str,
    name: &str,
) -> anyhow::Result<Report> {
    match res {
        Ok(r) => Ok(r),
        Err(e) if is_mathematical(&e) => {
            let mut r = Report::new();
            r.flag(label, name, false, Some(e.to_string()));
            Ok(r)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_check(out: &mut String, args: &InputArgs) -> anyhow::Result<u8> {
    let input = load(args)?;
    let name = select_for_check(&input.doc, args.object.as_deref())?;
    let report = report_or_error(check_object(&input.doc, &name), "check", "law checks")?;
    let doc = ReportDocument::new("check", &input.bytes, &name, input.doc.field, report);
    emit(out, args, &doc)?;
    Ok(exit_for(doc.passed))
}

fn cmd_verify_paper(out: &mut String, args: &InputArgs) -> anyhow::Result<u8> {
    let input = load(args)?;
    let name = select(&input.doc, args.object.as_deref(), &["comodule_algebra"])?;
    let report = report_or_error(
        verify_document(&input.doc, &name),
        "verify",
        "full verification",
    )?;
    let doc = ReportDocument::new("verify-paper", &input.bytes, &name, input.doc.field, report);
    emit(out, args, &doc)?;
    Ok(exit_for(doc.passed))
}

fn cmd_derive_torsor(out: &mut String, args: &InputArgs) -> anyhow::Result<u8> {
    let input = load(args)?;
    let name = select(&input.doc, args.object.as_deref(), &["comodule_algebra"])?;
    let (d, _) = input.doc.comodule(&name)?;
    let mut report = Report::new();
    let torsor = match make_galois(&d) {
        Ok(g) => {
            report.flag("galois", "T is an H-Galois object", true, None);
            match derive_torsor(&g) {
                Ok(t) => Some(t),
                Err(e) if is_mathematical(&e) => {
                    report.flag(
                        "torsor",
                        "θ and μ can be formed",
                        false,
                        Some(e.to_string()),
                    );
                    None
                }
                Err(e) => return Err(e.into()),
            }
        }
        Err(e) if is_mathematical(&e) => {
            report.flag(
                "galois",
                "T is an H-Galois object",
                false,
                Some(e.to_string()),
            );
            None
        }
        Err(e) => return Err(e.into()),
    };
    let file = torsor.as_ref().map(|t| {
        report.extend(check_algebra(&t.algebra).prefixed("T/"));
        report.extend(check_torsor_axioms(t));
        StructureFile::new(input.doc.field, vec![export_torsor(&name, t)])
    });
    let doc = ReportDocument::new(
        "derive-torsor",
        &input.bytes,
        &name,
        input.doc.field,
        report,
    );

    match (&args.out, &file) {
        (Some(path), Some(file)) => {
            fs::write(path, file.to_json() + "\n")
                .with_context(|| format!("cannot write {}", path.display()))?;
            if args.json {
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                print_text(out, &doc)?;
                writeln!(out, "torsor written to {}", path.display())?;
            }
        }
        _ => {
            if args.json {
                let combined = json!({ "torsor": file, "report": doc });
                writeln!(out, "{}", serde_json::to_string_pretty(&combined)?)?;
            } else {
                print_text(out, &doc)?;
                if let Some(file) = &file {
                    writeln!(out, "{}", file.to_json())?;
                }
            }
        }
    }
    Ok(exit_for(doc.passed))
}

fn cmd_list_builtins(out: &mut String, filter: Option<&str>, as_json: bool) -> anyhow::Result<u8> {
    let found = builtins::list(filter);
    if as_json {
        let rows: Vec<_> = found
            .iter()
            .map(|b| json!({ "name": b.name, "kind": b.kind.as_str(), "description": b.description }))
            .collect();
        writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
    } else {
        for b in &found {
            writeln!(
                out,
                "{:<20} {:<10} {}",
                b.name,
                b.kind.as_str(),
                b.description
            )?;
        }
    }
    if found.is_empty() {
        if let Some(f) = filter {
            eprintln!(
                "no builtin names contain {f:?}{}",
                suggest(f, builtins::BUILTINS.iter().map(|b| b.name))
            );
        }
    }
    Ok(0)
}

fn cmd_export(
    out: &mut String,
    name: &str,
    with_maps: bool,
    dest: Option<&PathBuf>,
) -> anyhow::Result<u8> {
    let builtin = builtins::find(name).ok_or_else(|| unknown_builtin(name))?;
    let mut file = builtins::structure_file(name)?;
    if with_maps {
        if builtin.kind != BuiltinKind::Galois {
            bail!(
                "--with-maps applies to Galois builtins only; {name:?} is a {}",
                builtin.kind.as_str()
            );
        }
        let d = builtins::galois(name)?;
        let g = make_galois(&d)?;
        file.objects[1] = export_comodule("T", "H", &d, Some(&g));
    }
    let text = file.to_json() + "\n";
    match dest {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))?
        }
        None => out.push_str(&text),
    }
    Ok(0)
}

fn run(out: &mut String, cli: Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Check(a) => cmd_check(out, a),
        Command::DeriveTorsor(a) => cmd_derive_torsor(out, a),
        Command::VerifyPaper(a) => cmd_verify_paper(out, a),
        Command::ListBuiltins { filter, json } => cmd_list_builtins(out, filter.as_deref(), *json),
        Command::Export {
            builtin,
            with_maps,
            out: dest,
        } => cmd_export(out, builtin, *with_maps, dest.as_ref()),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&mut out, cli);
    let mut stdout = io::stdout().lock();
    if let Err(e) = stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
    {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
