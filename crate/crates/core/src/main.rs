//! Command-line front end: runs the check suites and prints one JSON object
//! per check. Exit code 0 when every check passes, 1 on any failure, 2 on
//! usage errors.

use almost_fourier::clifford::{
    self, clifford_report, conj_action_check, delta_check, exceptional_lookup, simply_connected,
    ExceptionalType, GroupType, SpinDatum,
};
use almost_fourier::families::{family_report, FamilyId, ALL_FAMILIES};
use almost_fourier::groups::FiniteGroup;
use almost_fourier::hecke::{hecke_report, GraphKind};
use almost_fourier::heis::{heis_report, spectrum_report, symmetry_report, HeisenbergGroup};
use almost_fourier::pairing::classical_fourier;
use almost_fourier::report::{Reporter, Status};
use almost_fourier::Scalar;
use clap::{Parser, Subcommand};
use std::collections::BTreeMap;
use std::process::ExitCode;

/// Exact-arithmetic pairing, Hecke-module and Clifford-algebra checks.
#[derive(Parser)]
#[command(name = "almost-fourier", version)]
struct Cli {
    /// Seed for all sampled checks (env: ALMOST_FOURIER_SEED).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical nonabelian Fourier checks (Hermitian, M^2 = I).
    Fourier {
        /// One of: trivial, z2, z3, z4, s3, d4, q8 (default: all).
        #[arg(long)]
        group: Option<String>,
    },
    /// Heisenberg-family checks for one n.
    Heis {
        #[arg(long)]
        n: usize,
        /// Also print the spectrum line for M.
        #[arg(long)]
        spectrum: bool,
        /// Write the report as JSON lines to a file as well.
        #[arg(long)]
        json: Option<String>,
    },
    /// Golden checks for one tabulated family.
    Family {
        /// One of: F14, F15a, F15b, F112.
        #[arg(long)]
        id: String,
        #[arg(long)]
        json: Option<String>,
        /// Write the pairing matrix as CSV.
        #[arg(long)]
        csv: Option<String>,
    },
    /// W-graph and Hecke-module checks for one n.
    Hecke {
        #[arg(long)]
        n: usize,
        /// Restrict to one graph kind (a, b, c, d).
        #[arg(long)]
        kind: Option<String>,
        /// Edge parameter for kind d, as p/q.
        #[arg(long)]
        lambda: Option<String>,
        /// One of: relations, omega, restrict, decompose, vrc (default: all).
        #[arg(long)]
        check: Option<String>,
        #[arg(long)]
        json: Option<String>,
    },
    /// Clifford-algebra and spin-datum checks.
    Clifford {
        /// Multiplicity datum, comma-separated "i:m_i".
        #[arg(long)]
        datum: Option<String>,
        /// One of: beta, delta, conj, all (default: all).
        #[arg(long)]
        check: Option<String>,
        /// Simply-connectedness query: SL, Spin or Sp (with --m).
        #[arg(long)]
        sc: Option<String>,
        /// Multiplicity map for --sc, comma-separated "i:m_i".
        #[arg(long)]
        m: Option<String>,
        /// Exceptional-table lookup, "GROUP:LABEL" (e.g. F4:B_3).
        #[arg(long)]
        exceptional: Option<String>,
    },
    /// Run every suite and aggregate the report.
    VerifyAll,
}

const DEFAULT_SEED: u64 = 0xC4A7;

fn resolve_seed(flag: Option<u64>) -> u64 {
    flag.or_else(|| {
        std::env::var("ALMOST_FOURIER_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_SEED)
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn shipped_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("trivial", FiniteGroup::trivial()),
        ("z2", FiniteGroup::cyclic(2)),
        ("z3", FiniteGroup::cyclic(3)),
        ("z4", FiniteGroup::cyclic(4)),
        ("s3", FiniteGroup::symmetric(3)),
        ("d4", FiniteGroup::dihedral(4)),
        ("q8", FiniteGroup::quaternion8()),
    ]
}

fn fourier_report(only: Option<&str>) -> Result<Reporter, String> {
    let mut r = Reporter::new();
    let groups = shipped_groups();
    if let Some(name) = only {
        if !groups.iter().any(|(n, _)| *n == name) {
            return Err(format!("unknown group {name:?}"));
        }
    }
    for (name, g) in groups {
        if only.is_some() && only != Some(name) {
            continue;
        }
        match classical_fourier(&g) {
            Ok(gs) => {
                r.check(format!("fourier.{name}.hermitian"), "Hermitian", || {
                    let ok = gs.gram.is_hermitian();
                    (ok, if ok { "Hermitian".into() } else { "not Hermitian".into() })
                });
                r.check(format!("fourier.{name}.involution"), "M^2 = I", || {
                    let sq = &gs.gram * &gs.gram;
                    let ok = sq == almost_fourier::mat::Mat::identity(gs.gram.rows());
                    (ok, if ok { "M^2 = I".into() } else { "M^2 != I".into() })
                });
            }
            Err(e) => r.check(format!("fourier.{name}"), "builds", move || {
                (false, e.to_string())
            }),
        }
    }
    Ok(r)
}

fn emit(r: &Reporter, json_path: Option<&str>) -> ExitCode {
    let mut lines = String::new();
    for c in &r.checks {
        let line = c.to_json_line();
        println!("{line}");
        lines.push_str(&line);
        lines.push('\n');
    }
    if let Some(path) = json_path {
        if let Err(e) = std::fs::write(path, &lines) {
            eprintln!("error: cannot write {path}: {e}");
            return ExitCode::from(1);
        }
    }
    if r.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_hecke(
    n: usize,
    kind: Option<&str>,
    lambda: Option<&str>,
    check: Option<&str>,
    seed: u64,
) -> Result<Reporter, String> {
    use almost_fourier::hecke as hk;
    // A narrowed run: one kind and/or one check family.
    let parse_lambda = |s: Option<&str>| -> Result<Option<Scalar>, String> {
        match s {
            None => Ok(None),
            Some(t) => t
                .parse::<Scalar>()
                .map(Some)
                .map_err(|_| format!("cannot parse lambda {t:?}")),
        }
    };
    match (kind, check) {
        (None, None) => Ok(hecke_report(n, seed)),
        (k, c) => {
            let mut r = Reporter::new();
            let kinds: Vec<(GraphKind, &str)> = match k {
                None => vec![
                    (GraphKind::A, "a"),
                    (GraphKind::B, "b"),
                    (GraphKind::C, "c"),
                    (GraphKind::D, "d"),
                ],
                Some(s) => {
                    let gk: GraphKind = s.parse()?;
                    vec![(gk, match gk {
                        GraphKind::A => "a",
                        GraphKind::B => "b",
                        GraphKind::C => "c",
                        GraphKind::D => "d",
                    })]
                }
            };
            let lam = parse_lambda(lambda)?;
            let checks = match c {
                None => vec!["relations", "omega", "restrict", "decompose", "vrc"],
                Some("relations") => vec!["relations"],
                Some("omega") => vec!["omega"],
                Some("restrict") => vec!["restrict"],
                Some("decompose") => vec!["decompose"],
                Some("vrc") => vec!["vrc"],
                Some(other) => return Err(format!("unknown check {other:?}")),
            };
            for (gk, tag) in &kinds {
                let lam_for_kind = if *gk == GraphKind::D {
                    Some(lam.clone().unwrap_or_else(|| Scalar::from_int(1)))
                } else {
                    None
                };
                let built = hk::wgraph(*gk, n, lam_for_kind)
                    .and_then(|g| hk::module(&g).map(|m| (g, m)));
                match built {
                    Ok((g, m)) => {
                        if checks.contains(&"relations") {
                            r.check_eq(
                                format!("hecke{n}.relations.{tag}"),
                                "hold".to_string(),
                                "hold".to_string(),
                            );
                        }
                        if checks.contains(&"omega") {
                            r.check(format!("hecke{n}.omega.{tag}"), "holds", || {
                                match hk::omega(*gk, &g, &m) {
                                    Ok(_) => (true, "holds".into()),
                                    Err(e) => (false, e.to_string()),
                                }
                            });
                        }
                        if checks.contains(&"restrict") {
                            r.check(format!("hecke{n}.restrict.{tag}"), "stable for all i", || {
                                for i in 0..=n {
                                    if let Err(e) = hk::restrict(&m, &g, i) {
                                        return (false, format!("i = {i}: {e}"));
                                    }
                                }
                                (true, "stable for all i".into())
                            });
                        }
                    }
                    Err(e) => r.check(format!("hecke{n}.relations.{tag}"), "hold", move || {
                        (false, e.to_string())
                    }),
                }
            }
            if checks.contains(&"decompose") {
                r.check(format!("hecke{n}.decompose-d1"), "passes", || {
                    match hk::decompose_d1(n, seed) {
                        Ok(rep) => (true, format!("dims ({}, {})", rep.plus_dim, rep.minus_dim)),
                        Err(e) => (false, e.to_string()),
                    }
                });
            }
            if checks.contains(&"vrc") {
                r.extend(hk::vrc_identities());
            }
            Ok(r)
        }
    }
}

fn parse_multiplicities(s: &str) -> Result<BTreeMap<u32, u32>, String> {
    SpinDatum::parse(s)
        .map(|d| d.multiplicities)
        .map_err(|e| e.to_string())
}

fn run_clifford(
    datum: Option<&str>,
    check: Option<&str>,
    sc: Option<&str>,
    m: Option<&str>,
    exceptional: Option<&str>,
    seed: u64,
) -> Result<Reporter, String> {
    let mut r = Reporter::new();
    if let Some(query) = exceptional {
        let (g, label) = query
            .split_once(':')
            .ok_or_else(|| format!("expected GROUP:LABEL, got {query:?}"))?;
        let gt: ExceptionalType = g.parse()?;
        let rec = exceptional_lookup(gt, label).map_err(|e| e.to_string())?;
        r.note(
            format!("clifford.exceptional.{g}.{label}"),
            Status::Pass,
            "row found",
            format!(
                "H = {}; components {}; simply connected: {}",
                rec.h_structure, rec.component_group, rec.simply_connected
            ),
        );
        return Ok(r);
    }
    if let Some(ty) = sc {
        let ty: GroupType = ty.parse()?;
        let map = parse_multiplicities(m.ok_or("--sc requires --m")?)?;
        let ans = simply_connected(ty, &map);
        r.note(
            "clifford.simply-connected",
            Status::Pass,
            "computed",
            ans.to_string(),
        );
        return Ok(r);
    }
    match (datum, check) {
        (None, None) => {
            r.extend(clifford_report(seed));
        }
        (d, c) => {
            let spec = d.unwrap_or("1:1,3:1");
            let datum = SpinDatum::parse(spec).map_err(|e| e.to_string())?;
            let which = c.unwrap_or("all");
            if which == "beta" || which == "all" {
                r.extend(clifford::beta_suite(datum.n().min(8).max(2), 200, seed));
            }
            if which == "delta" || which == "all" {
                r.extend(delta_check(&datum).map_err(|e| e.to_string())?);
            }
            if which == "conj" || which == "all" {
                for i in datum.i_odd() {
                    let e = datum.e_unit(i).map_err(|e| e.to_string())?;
                    r.extend(conj_action_check(&datum, i, &e, &e).map_err(|e| e.to_string())?);
                }
            }
            if !["beta", "delta", "conj", "all"].contains(&which) {
                return Err(format!("unknown check {which:?}"));
            }
        }
    }
    Ok(r)
}

fn verify_all(seed: u64) -> Reporter {
    let mut r = Reporter::new();
    match fourier_report(None) {
        Ok(sub) => r.extend(sub),
        Err(e) => r.check("fourier", "runs", move || (false, e)),
    }
    for id in ALL_FAMILIES {
        match family_report(id) {
            Ok(rep) => r.extend(rep.reporter),
            Err(e) => r.check(format!("{id}.report"), "runs", move || (false, e.to_string())),
        }
    }
    match heis_report(1) {
        Ok(sub) => r.extend(sub),
        Err(e) => r.check("heis1", "runs", move || (false, e.to_string())),
    }
    match symmetry_report(1, None, seed) {
        Ok(sub) => r.extend(sub),
        Err(e) => r.check("heis1.symmetry", "runs", move || (false, e.to_string())),
    }
    r.extend(hecke_report(2, seed));
    r.extend(clifford_report(seed));
    r
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = resolve_seed(cli.seed);
    let result: Result<(Reporter, Option<String>), String> = match &cli.command {
        Command::Fourier { group } => {
            fourier_report(group.as_deref()).map(|r| (r, None))
        }
        Command::Heis { n, spectrum, json } => {
            let rep = heis_report(*n).map_err(|e| e.to_string());
            match rep {
                Ok(mut r) => {
                    if *spectrum {
                        match HeisenbergGroup::build(*n) {
                            Ok(h) => {
                                let s = spectrum_report(&h);
                                r.note(
                                    format!("heis{n}.spectrum-line"),
                                    Status::Pass,
                                    "printed",
                                    s.char_poly_string(),
                                );
                            }
                            Err(e) => return usage_error(&e.to_string()),
                        }
                    }
                    Ok((r, json.clone()))
                }
                Err(e) => Err(e),
            }
        }
        Command::Family { id, json, csv } => {
            let parsed: Result<FamilyId, _> = id.parse();
            match parsed {
                Ok(fid) => match family_report(fid) {
                    Ok(rep) => {
                        if let Some(path) = csv {
                            if let Err(e) = std::fs::write(path, rep.gram.to_csv()) {
                                return usage_error(&format!("cannot write {path}: {e}"));
                            }
                        }
                        Ok((rep.reporter, json.clone()))
                    }
                    Err(e) => Err(e.to_string()),
                },
                Err(e) => Err(e),
            }
        }
        Command::Hecke {
            n,
            kind,
            lambda,
            check,
            json,
        } => run_hecke(*n, kind.as_deref(), lambda.as_deref(), check.as_deref(), seed)
            .map(|r| (r, json.clone())),
        Command::Clifford {
            datum,
            check,
            sc,
            m,
            exceptional,
        } => run_clifford(
            datum.as_deref(),
            check.as_deref(),
            sc.as_deref(),
            m.as_deref(),
            exceptional.as_deref(),
            seed,
        )
        .map(|r| (r, None)),
        Command::VerifyAll => Ok((verify_all(seed), None)),
    };
    match result {
        Ok((r, json)) => emit(&r, json.as_deref()),
        Err(e) => usage_error(&e),
    }
}
