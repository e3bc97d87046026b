//! `paulidecomp`: build groups from spec strings, decompose them, count
//! their abelian subgroups, draw subgroup lattices and run the claim suite.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use paulidecomp::census::{abelian_census, export_dot, export_json, hasse, LatticeFilter};
use paulidecomp::group::Limits;
use paulidecomp::lifted::corollary52_53_check;
use paulidecomp::products::{classify_special, decompose_pauli_chain, extraspecial_decompose};
use paulidecomp::spec::{GroupReport, GroupSpec};
use paulidecomp::suite::{run_claim, SuiteOptions, SuiteReport, CLAIMS};
use paulidecomp::{Error, Result};

const CAP_ENV: &str = "PAULIDECOMP_CAP_OVERRIDE";

const SPEC_HELP: &str = "\
Group spec grammar (EBNF):
  spec       = \"trivial\" | pauli | lifted | heis | reference | params ;
  pauli      = \"pauli:\" params ;
  lifted     = \"lifted:\" params ;
  params     = param { \",\" param } ;
  param      = ( \"p\" | \"m\" | \"n\" ) \"=\" integer ;
  heis       = \"heis:\" heis-param { \",\" heis-param } ;
  heis-param = \"R=\" ring | \"n=\" integer
             | \"cocycle=\" ( \"symplectic\" | \"polarized\" )
             | \"reduced=\" ( \"true\" | \"false\" ) ;
  ring       = ( \"gf\" | \"z\" ) \"(\" integer \")\" ;
  reference  = \"d8\" | \"q8\" | ( \"e1\" | \"e2\" | \"dihedral\" ) \"(\" integer \")\" ;
m and n default to 1; a bare params string means pauli.

Exit codes: 0 success (refuted claims included), 2 bad input,
3 size cap exceeded, 4 internal inconsistency.";

#[derive(Parser, Debug)]
#[command(name = "paulidecomp", version, about = "Exact structure of Pauli, Heisenberg and lifted Pauli groups", after_help = SPEC_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write output to this file (atomically) instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Largest group that may be materialized.
    #[arg(long, global = true)]
    cap_closure: Option<usize>,

    /// Largest group whose subgroup lattice may be enumerated.
    #[arg(long, global = true)]
    cap_subgroups: Option<usize>,

    /// Exact abelian-subgroup counts beyond two registers.
    #[arg(long, global = true)]
    exhaustive: bool,

    /// Seed for sampled associativity checks on large tables.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Omit wall times from verdicts, making output byte-reproducible.
    #[arg(long, global = true)]
    no_timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a group and print its structural summary.
    Build { spec: String },
    /// Chain decomposition for qubit Pauli groups, central factors for
    /// extraspecial groups, and the structural flags in every case.
    Decompose { spec: String },
    /// Count the nontrivial abelian subgroups.
    Census { spec: String },
    /// Subgroup lattice as a Hasse diagram.
    Lattice {
        spec: String,
        #[arg(long, value_enum, default_value_t = Filter::All)]
        filter: Filter,
    },
    /// Run the claim suite: `all` or one claim id.
    Verify {
        #[arg(default_value = "all")]
        scope: String,
    },
    /// Check the trace epimorphism from the lifted group, e.g. `p=3,m=2,n=1`.
    Lifted { params: String },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Filter {
    All,
    PaperFigure,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidArgument(_) | Error::NotPrime(_) | Error::Domain(_) => 2,
        Error::CapExceeded { .. } => 3,
        Error::Inconsistency(_) => 4,
        _ => 1,
    }
}

/// `closure=N,subgroups=M`, either key optional.
fn env_caps(raw: &str, limits: &mut Limits) -> Result<()> {
    for kv in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse(format!("{CAP_ENV}: expected key=value, got {kv:?}")))?;
        let v: usize = v.trim().parse().map_err(|_| Error::Parse(format!("{CAP_ENV}: {k} expects an integer")))?;
        match k.trim() {
            "closure" => limits.closure = v,
            "subgroups" => limits.subgroups = v,
            other => return Err(Error::Parse(format!("{CAP_ENV}: unknown key {other:?}"))),
        }
    }
    Ok(())
}

fn limits(cli: &Cli) -> Result<Limits> {
    let mut l = Limits::default();
    if let Ok(raw) = std::env::var(CAP_ENV) {
        env_caps(&raw, &mut l)?;
    }
    if let Some(c) = cli.cap_closure {
        l.closure = c;
    }
    if let Some(c) = cli.cap_subgroups {
        l.subgroups = c;
    }
    if let Some(s) = cli.seed {
        l.seed = s;
    }
    Ok(l)
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn no_dot(cmd: &str) -> Result<()> {
    Err(Error::Parse(format!("--format dot is only available for lattice, not {cmd}")))
}

fn run(cli: &Cli) -> Result<String> {
    let l = limits(cli)?;
    match &cli.command {
        Command::Build { spec } => {
            let s: GroupSpec = spec.parse()?;
            if cli.format == Format::Dot {
                no_dot("build")?;
            }
            let g = s.build(&l)?;
            let r = GroupReport::of(&s, &g, &l)?;
            Ok(match cli.format {
                Format::Text => format!(
                    "spec: {}\norder: {}\nexponent: {}\ncenter: {}\nderived: {}\nfrattini: {}\ngenerators: {}\n",
                    r.spec,
                    r.order,
                    r.exponent,
                    r.center_order,
                    r.derived_order,
                    r.frattini_order.map_or("over cap".into(), |f| f.to_string()),
                    r.generators.join(", ")
                ),
                _ => pretty(&r),
            })
        }
        Command::Decompose { spec } => {
            let s: GroupSpec = spec.parse()?;
            if cli.format == Format::Dot {
                no_dot("decompose")?;
            }
            let g = s.build(&l)?;
            let decomposition = match &s {
                GroupSpec::Pauli(p) if p.p() == 2 && p.m() == 1 => Some(decompose_pauli_chain(p.n(), &l)?),
                _ => None,
            };
            let flags = classify_special(&g, &l)?;
            let decomposition = match decomposition {
                Some(d) => Some(d),
                None if flags.extraspecial.value => Some(extraspecial_decompose(&g, &l)?),
                None => None,
            };
            Ok(match cli.format {
                Format::Text => {
                    let mut out = format!("group: {} (order {})\n", s, g.order());
                    if let Some(d) = &decomposition {
                        let class = serde_json::to_value(d.classification).expect("enum serializes");
                        out += &format!("classification: {}\n", class.as_str().unwrap_or_default());
                        for (i, f) in d.factors.iter().enumerate() {
                            out += &format!("factor {}: order {} {}\n", i + 1, f.order, f.identified);
                        }
                        for link in &d.links {
                            out += &format!("link {}: order {} {}\n", link.step, link.link.order, link.link.identified);
                        }
                    }
                    for (name, f) in [
                        ("extraspecial", &flags.extraspecial),
                        ("generalized_extraspecial", &flags.generalized_extraspecial),
                        ("just_nonabelian", &flags.just_nonabelian),
                        ("minimal_nonabelian", &flags.minimal_nonabelian),
                    ] {
                        out += &format!("{name}: {}\n", f.value);
                    }
                    out
                }
                _ => pretty(&json!({ "spec": s.to_string(), "decomposition": decomposition, "flags": flags })),
            })
        }
        Command::Census { spec } => {
            let s: GroupSpec = spec.parse()?;
            if cli.format == Format::Dot {
                no_dot("census")?;
            }
            let c = abelian_census(&s.build(&l)?, &l)?;
            Ok(match cli.format {
                Format::Text => {
                    let mut out = format!("group: {}\norder: {}\nc_ab: {}\n", s, c.order, c.c_ab);
                    for b in &c.breakdown {
                        out += &format!("  order {} {} {}: {}\n", b.order, b.kind, if b.normal { "normal" } else { "nonnormal" }, b.count);
                    }
                    out
                }
                _ => pretty(&c),
            })
        }
        Command::Lattice { spec, filter } => {
            let s: GroupSpec = spec.parse()?;
            let filter = match filter {
                Filter::All => LatticeFilter::All,
                Filter::PaperFigure => LatticeFilter::PaperFigure,
            };
            let graph = hasse(&s.build(&l)?, filter, &l)?;
            Ok(match cli.format {
                Format::Dot => export_dot(&graph),
                Format::Json => export_json(&graph) + "\n",
                Format::Text => {
                    let mut out = format!("nodes: {}\nedges: {}\n", graph.nodes.len(), graph.edges.len());
                    for (a, b) in graph.named_edges() {
                        out += &format!("{a} < {b}\n");
                    }
                    out
                }
            })
        }
        Command::Verify { scope } => {
            if cli.format == Format::Dot {
                no_dot("verify")?;
            }
            if scope != "all" && !CLAIMS.contains(&scope.as_str()) {
                return Err(Error::Parse(format!("unknown claim id {scope:?}; expected all or one of {}", CLAIMS.join(", "))));
            }
            let opts = SuiteOptions { limits: l, exhaustive: cli.exhaustive, timings: !cli.no_timings };
            let ids: Vec<&str> = if scope == "all" { CLAIMS.to_vec() } else { vec![scope.as_str()] };
            let mut claims = Vec::new();
            for (i, id) in ids.iter().enumerate() {
                eprintln!("[{}/{}] {id}", i + 1, ids.len());
                claims.push(run_claim(id, &opts)?);
            }
            let mut summary = std::collections::BTreeMap::new();
            for c in &claims {
                *summary.entry(c.status.as_str().to_string()).or_insert(0usize) += 1;
            }
            let report = SuiteReport { scope: scope.clone(), claims, summary };
            Ok(match cli.format {
                Format::Text => report
                    .claims
                    .iter()
                    .map(|c| {
                        let t = c.wall_time_ms.map_or(String::new(), |t| format!(" ({t} ms)"));
                        format!("{:<18} {}{t}\n", c.claim_id, c.status.as_str())
                    })
                    .collect(),
                _ => pretty(&report),
            })
        }
        Command::Lifted { params } => {
            let full = if params.contains(':') { params.clone() } else { format!("lifted:{params}") };
            let GroupSpec::Lifted(s) = full.parse()? else {
                return Err(Error::Parse(format!("expected lifted parameters, got {params:?}")));
            };
            if cli.format == Format::Dot {
                no_dot("lifted")?;
            }
            let r = corollary52_53_check(s.p(), s.m(), s.n(), &l)?;
            Ok(match cli.format {
                Format::Text => {
                    let mut out = format!("{} {}\n", r.claim_id, r.status.as_str());
                    for c in &r.checks {
                        let mark = match c.holds {
                            Some(true) => "ok  ",
                            Some(false) => "FAIL",
                            None => "info",
                        };
                        out += &format!("{mark} {}: {}\n", c.name, c.observed);
                    }
                    out
                }
                _ => pretty(&r),
            })
        }
    }
}

fn write_atomic(path: &Path, text: &str) -> std::io::Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let written = match &cli.out {
                Some(path) => write_atomic(path, &text),
                None => std::io::stdout().write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn env_caps_parse() {
        let mut l = Limits::default();
        env_caps("closure=10, subgroups=5", &mut l).unwrap();
        assert_eq!((l.closure, l.subgroups), (10, 5));
        assert!(env_caps("closure", &mut l).is_err());
        assert!(env_caps("depth=3", &mut l).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Parse("x".into())), 2);
        assert_eq!(exit_code(&Error::CapExceeded { what: "x", cap: 1 }), 3);
        assert_eq!(exit_code(&Error::Inconsistency("x".into())), 4);
    }

    #[test]
    fn cli_definition_is_valid() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
