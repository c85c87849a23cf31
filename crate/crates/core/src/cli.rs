//! Command-line front end.
//!
//! Exit codes: 0 on success, 2 when the input is valid but the answer is
//! negative (too few chains, no parity-fixing deletion, failed self-test),
//! 1 on usage or input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::chain::{boundary, EdgeChain, VertexChain};
use crate::error::{Error, Result};
use crate::fixture;
use crate::format::{parse_graph, write_graph, GraphFile};
use crate::graph::{EdgeId, VertexId};
use crate::oracle::{self, InstanceSpec, ParityRule};
use crate::packing::{
    self, augment_odd, find_packing, max_packing, paths_packing, theorem6_check, AugmentPlan,
};
use crate::realize::{decompose_cycles, extract_path, PathSeq};
use crate::resilience::resilience;

#[derive(Parser, Debug)]
#[command(
    name = "menger4",
    version,
    about = "Four-terminal chain packing and resilience"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum number of edge deletions leaving no chain with the terminal boundary.
    Resilience { file: PathBuf },
    /// Maximum packing, or `k` disjoint chains when `-k` is given.
    Pack {
        file: PathBuf,
        #[arg(short)]
        k: Option<usize>,
    },
    /// `k` terminal splits realized by pairwise edge-disjoint paths.
    Paths {
        file: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Splits a cycle into edge-disjoint closed walks.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        chain: String,
    },
    /// Extracts a path from a chain with a two-vertex boundary.
    Extract {
        file: PathBuf,
        #[arg(long)]
        chain: String,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
    },
    /// Adds one edge per odd-degree interior vertex and prints the new graph.
    Augment {
        file: PathBuf,
        #[arg(long)]
        plan: String,
    },
    /// Searches for a parity-fixing deletion that keeps resilience at least `k`.
    Check6 {
        file: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Writes a built-in graph.
    Fixture {
        name: String,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Compares fast algorithms with brute force on random instances.
    Selftest {
        #[arg(long, default_value_t = 100)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        even_interior: bool,
    },
}

#[derive(Serialize)]
struct Report {
    k: usize,
    chains: Vec<Vec<EdgeId>>,
    certificate: Vec<EdgeId>,
}

/// What a subcommand produced: text lines, the JSON report and the exit code.
struct Outcome {
    lines: Vec<String>,
    report: Report,
    code: u8,
}

impl Outcome {
    fn ok(lines: Vec<String>, report: Report) -> Self {
        Outcome {
            lines,
            report,
            code: 0,
        }
    }
}

fn load(path: &Path) -> Result<GraphFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        msg: format!("{}: {e}", path.display()),
    })?;
    parse_graph(&text)
}

fn parse_chain(s: &str) -> Result<EdgeChain> {
    s.parse().map_err(|msg: String| Error::Parse { line: 0, msg })
}

fn chain_line(c: &EdgeChain) -> String {
    format!("chain: {c}")
}

fn path_lines(paths: &[PathSeq]) -> Vec<String> {
    paths.iter().map(|p| p.to_string()).collect()
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    1
                }
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(outcome) => {
            let written = match cli.format {
                Format::Text => outcome.lines.iter().try_for_each(|l| writeln!(out, "{l}")),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&outcome.report).expect("report serializes")
                ),
            };
            if written.is_err() {
                return 1;
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Resilience { file } => {
            let f = load(file)?;
            let t = f.require_terminals()?;
            let r = resilience(&f.graph, &t)?;
            let cert: EdgeChain = r.cert.deleted.iter().copied().collect();
            let witness: VertexChain = r.cert.witness_component.iter().copied().collect();
            Ok(Outcome::ok(
                vec![
                    format!("k={}", r.k),
                    format!("certificate: {cert}"),
                    format!("component: {witness}"),
                ],
                Report {
                    k: r.k,
                    chains: Vec::new(),
                    certificate: r.cert.deleted,
                },
            ))
        }
        Command::Pack { file, k } => {
            let f = load(file)?;
            let t = f.require_terminals()?;
            let cert = resilience(&f.graph, &t)?.cert.deleted;
            let (found, code, mut lines) = match *k {
                None => {
                    let (n, p) = max_packing(&f.graph, &t)?;
                    (p.chains, 0, vec![format!("k={n}")])
                }
                Some(k) => match find_packing(&f.graph, &t, k)? {
                    Some(p) => (p.chains.into_iter().take(k).collect(), 0, vec![format!("k={k}")]),
                    None => {
                        let (n, p) = max_packing(&f.graph, &t)?;
                        let msg = Error::InsufficientPacking {
                            requested: k,
                            maximum: n,
                        }
                        .to_string();
                        (p.chains, 2, vec![msg])
                    }
                },
            };
            lines.extend(found.iter().map(chain_line));
            Ok(Outcome {
                lines,
                report: Report {
                    k: found.len(),
                    chains: found.iter().map(EdgeChain::to_vec).collect(),
                    certificate: cert,
                },
                code,
            })
        }
        Command::Paths { file, k } => {
            let f = load(file)?;
            let t = f.require_terminals()?;
            match paths_packing(&f.graph, &t, *k) {
                Ok(splits) => {
                    let mut lines = vec![format!("k={k}")];
                    let mut chains = Vec::new();
                    for (i, s) in splits.iter().enumerate() {
                        lines.push(format!("split {}:", i + 1));
                        lines.extend(path_lines(&s.paths).into_iter().map(|l| format!("  {l}")));
                        chains.extend(s.paths.iter().map(|p| p.edges().to_vec()));
                    }
                    Ok(Outcome::ok(
                        lines,
                        Report {
                            k: *k,
                            chains,
                            certificate: Vec::new(),
                        },
                    ))
                }
                Err(e @ Error::InsufficientPacking { maximum, .. }) => Ok(Outcome {
                    lines: vec![e.to_string()],
                    report: Report {
                        k: maximum,
                        chains: Vec::new(),
                        certificate: resilience(&f.graph, &t)?.cert.deleted,
                    },
                    code: 2,
                }),
                Err(e) => Err(e),
            }
        }
        Command::Decompose { file, chain } => {
            let f = load(file)?;
            let c = parse_chain(chain)?;
            let cycles = decompose_cycles(&f.graph, &c)?;
            Ok(Outcome::ok(
                path_lines(&cycles),
                Report {
                    k: cycles.len(),
                    chains: cycles.iter().map(|p| p.edges().to_vec()).collect(),
                    certificate: Vec::new(),
                },
            ))
        }
        Command::Extract {
            file,
            chain,
            from,
            to,
        } => {
            let f = load(file)?;
            let c = parse_chain(chain)?;
            let (u, v) = match (from, to) {
                (Some(a), Some(b)) => (VertexId::new(*a), VertexId::new(*b)),
                _ => {
                    let b = boundary(&f.graph, &c)?;
                    match b.to_vec().as_slice() {
                        &[a, b] => (a, b),
                        _ => {
                            return Err(Error::BadBoundary {
                                expected: "two vertices".into(),
                                found: b.to_string(),
                            })
                        }
                    }
                }
            };
            let path = extract_path(&f.graph, &c, u, v)?;
            let residue = &c + &path.edge_chain();
            Ok(Outcome::ok(
                vec![path.to_string(), format!("residue: {residue}")],
                Report {
                    k: 1,
                    chains: vec![path.edges().to_vec()],
                    certificate: residue.to_vec(),
                },
            ))
        }
        Command::Augment { file, plan } => {
            let f = load(file)?;
            let t = f.require_terminals()?;
            let plan: AugmentPlan = plan.parse().map_err(Error::PlanInvalid)?;
            let gn = augment_odd(&f.graph, &t, &plan)?;
            let added: Vec<EdgeId> = gn.edge_ids().filter(|e| !f.graph.contains_edge(*e)).collect();
            Ok(Outcome::ok(
                write_graph(&gn, Some(&t)).lines().map(str::to_owned).collect(),
                Report {
                    k: added.len(),
                    chains: Vec::new(),
                    certificate: added,
                },
            ))
        }
        Command::Check6 { file, k } => {
            let f = load(file)?;
            let t = f.require_terminals()?;
            let (ok, d) = theorem6_check(&f.graph, &t, *k)?;
            let deletion: EdgeChain = d.iter().copied().collect();
            Ok(Outcome {
                lines: vec![format!("ok={ok}"), format!("deletion: {deletion}")],
                report: Report {
                    k: *k,
                    chains: Vec::new(),
                    certificate: d,
                },
                code: if ok { 0 } else { 2 },
            })
        }
        Command::Fixture { name, o } => {
            let (g, t) = fixture::by_name(name).ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("unknown fixture `{name}`; known: {}", fixture::NAMES.join(", ")),
            })?;
            let text = write_graph(&g, Some(&t));
            let lines = match o {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| Error::Parse {
                        line: 0,
                        msg: format!("{}: {e}", path.display()),
                    })?;
                    vec![format!("wrote {}", path.display())]
                }
                None => text.lines().map(str::to_owned).collect(),
            };
            Ok(Outcome::ok(
                lines,
                Report {
                    k: g.edge_count(),
                    chains: Vec::new(),
                    certificate: Vec::new(),
                },
            ))
        }
        Command::Selftest {
            instances,
            seed,
            even_interior,
        } => selftest(*instances, *seed, *even_interior),
    }
}

fn selftest(instances: usize, seed: u64, even: bool) -> Result<Outcome> {
    let parity = if even {
        ParityRule::EvenInterior
    } else {
        ParityRule::Unconstrained
    };
    let names = [
        "resilience = brute",
        "max_packing = brute",
        "packing <= resilience",
        "packing verifies",
        "even interior => packing = resilience",
    ];
    let mut pass = [0usize; 5];
    let mut fail = [0usize; 5];
    let mut tally = |i: usize, ok: bool| {
        if ok {
            pass[i] += 1;
        } else {
            fail[i] += 1;
        }
    };
    for i in 0..instances {
        let s = seed.wrapping_add(i as u64);
        let spec = InstanceSpec::new(4 + (s % 6) as usize, 12, parity, s);
        let (g, t) = oracle::gen_instance(&spec)?;
        let r = resilience(&g, &t)?.k;
        let (p, pk) = max_packing(&g, &t)?;
        tally(0, r == oracle::brute_resilience(&g, &t)?);
        tally(1, p == oracle::brute_max_packing(&g, &t)?);
        tally(2, p <= r);
        tally(3, pk.verify(&g).is_ok());
        if packing::odd_interior(&g, &t)?.is_empty() {
            tally(4, p == r);
        }
    }
    let mut lines = vec![format!("{:<40} {:>6} {:>6}", "property", "pass", "fail")];
    for (j, name) in names.iter().enumerate() {
        let status = if fail[j] == 0 { "PASS" } else { "FAIL" };
        lines.push(format!("{name:<40} {:>6} {:>6}  {status}", pass[j], fail[j]));
    }
    let failures: usize = fail.iter().sum();
    lines.push(format!("{instances} instances, {failures} failures"));
    Ok(Outcome {
        lines,
        report: Report {
            k: failures,
            chains: Vec::new(),
            certificate: Vec::new(),
        },
        code: if failures == 0 { 0 } else { 2 },
    })
}
