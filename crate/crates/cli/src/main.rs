//! `monideal`: command-line front end for square-free monomial ideal
//! computations.
//!
//! Exit codes: 0 computed, 1 predicate false (`konig`, `packing`, `ntf`),
//! 2 usage or input error, 3 resource budget exceeded.

mod input;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use monideal::analysis::{analyze, AnalysisConfig};
use monideal::ntf::{self, BoundRule, Budget};
use monideal::polarization::polarize_ideal;
use monideal::primary::{ass_witness_oracle, associated_primes, minimal_primes, symbolic_power};
use monideal::search::{search, Dedup, Predicate, ResumeToken, SearchConfig};
use monideal::text::{render_edge_list, render_ideal, render_monomial, render_prime};
use monideal::{Error, MinorResult, MinorSpec, MonomialIdeal, MonomialPrime, VarNames, VarSet};
use serde_json::{json, Value};

use input::{FormatArg, Input};

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (report schema 1.0.0)");

#[derive(Parser)]
#[command(name = "monideal", version = VERSION, about = "Square-free monomial ideals, hypergraph minors and associated primes of powers")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(flatten)]
    budget: BudgetArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// Largest divisor box the witness oracle scans.
    #[arg(long, global = true, default_value_t = Budget::default().max_box)]
    max_box: u64,
    /// Largest power computed.
    #[arg(long, global = true, default_value_t = Budget::default().max_power)]
    max_power: usize,
    /// Largest number of delete/contract assignments (3^k for k vertices).
    #[arg(long, global = true, default_value_t = Budget::default().max_minors)]
    max_minors: u64,
    /// Largest number of minimal generators of a power.
    #[arg(long, global = true, default_value_t = Budget::default().max_generators)]
    max_generators: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_box: self.max_box,
            max_power: self.max_power,
            max_minors: self.max_minors,
            max_generators: self.max_generators,
        }
    }
}

/// Where the ideal or hypergraph comes from.
#[derive(Args)]
struct Source {
    /// File path, `-` for standard input, or the text itself, e.g.
    /// "(x*y, y*z, x*z)" or "x1 x2 / x2 x3".
    input: String,
    /// Input grammar; `auto` picks ideal-expr when the text starts with `(`.
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
    /// Explicit variable names in ring order, e.g. "a,b,c,d".
    #[arg(long)]
    vars: Option<String>,
}

impl Source {
    fn load(&self) -> Result<Input, Error> {
        Input::load(&self.input, self.format, self.vars.as_deref())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RuleArg {
    Dimension,
    BetaStar,
}

impl From<RuleArg> for BoundRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Dimension => BoundRule::Dimension,
            RuleArg::BetaStar => BoundRule::BetaStarPlusOne,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateArg {
    MinimallyNonPacking,
    OnsetEqualsBeta1PlusOne,
    NtfViolation,
}

#[derive(Subcommand)]
enum Command {
    /// Associated primes of R/I^t.
    Ass {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 1)]
        t: usize,
        /// Use the colon-witness scan instead of the decomposition.
        #[arg(long)]
        oracle: bool,
    },
    /// Minimal primes of R/I.
    MinPrimes {
        #[command(flatten)]
        src: Source,
    },
    /// Minimal generators of I^t.
    Power {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        t: usize,
    },
    /// Symbolic power I^(t) of a square-free ideal.
    Symbolic {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        t: usize,
    },
    /// The colon ideal (I^t : m) for a monomial m.
    Colon {
        #[command(flatten)]
        src: Source,
        /// The monomial, e.g. "x1*x2^2".
        #[arg(long)]
        by: String,
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// Polarization of I^t.
    Polarize {
        #[command(flatten)]
        src: Source,
        #[arg(long, default_value_t = 1)]
        t: usize,
    },
    /// Deletion/contraction minor.
    Minor {
        #[command(flatten)]
        src: Source,
        /// Variables set to 0, e.g. "x1,x4".
        #[arg(long, default_value = "")]
        delete: String,
        /// Variables set to 1.
        #[arg(long, default_value = "")]
        contract: String,
    },
    /// Cover number, matching number, and related structure.
    Invariants {
        #[command(flatten)]
        src: Source,
    },
    /// Whether the minimum cover size equals the matching number.
    Konig {
        #[command(flatten)]
        src: Source,
    },
    /// Whether the hypergraph and all of its minors are König.
    Packing {
        #[command(flatten)]
        src: Source,
    },
    /// Embedded primes of I^t for t up to a bound.
    Ntf {
        #[command(flatten)]
        src: Source,
        /// Power bound; defaults to the value given by --rule.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, value_enum, default_value_t = RuleArg::Dimension)]
        rule: RuleArg,
    },
    /// Full report: invariants, minors, powers, and theorem checks.
    Analyze {
        #[command(flatten)]
        src: Source,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, value_enum, default_value_t = RuleArg::Dimension)]
        rule: RuleArg,
    },
    /// Enumerate small hypergraphs with a property.
    Search {
        #[arg(long)]
        d_max: usize,
        /// Edge size or range, e.g. "2" or "2..3".
        #[arg(long, default_value = "2")]
        edge_size: String,
        #[arg(long)]
        max_edges: Option<usize>,
        /// Keep isomorphic copies instead of one per class.
        #[arg(long)]
        no_dedup: bool,
        #[arg(long, value_enum, default_value_t = PredicateArg::MinimallyNonPacking)]
        predicate: PredicateArg,
        /// Discard unmixed candidates.
        #[arg(long)]
        skip_unmixed: bool,
        /// Skip the onset check on each hit.
        #[arg(long)]
        no_onset_check: bool,
        /// Stop after this many candidates and print a resume token.
        #[arg(long)]
        max_candidates: Option<u64>,
        /// Continue from a token printed by an earlier run.
        #[arg(long)]
        resume: Option<String>,
    },
}

/// What a subcommand produced.
struct Outcome {
    text: String,
    json: Value,
    /// For predicate commands: `Some(false)` exits with status 1.
    holds: Option<bool>,
}

impl Outcome {
    fn new(text: String, json: Value) -> Self {
        Outcome { text, json, holds: None }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = cli.budget.budget();
    match run(cli.command, &budget) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            } else {
                print!("{}", out.text);
            }
            match out.holds {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string(), "kind": error_kind(&e) }));
            }
            eprintln!("monideal: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Resource { .. } | Error::Overflow { .. } => 3,
        _ => 2,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Resource { .. } | Error::Overflow { .. } => "resource",
        Error::Parse { .. } => "parse",
        _ => "usage",
    }
}

fn prime_json(p: &MonomialPrime, names: &VarNames) -> Value {
    json!({ "vars": p.vars(), "text": render_prime(p, names) })
}

fn primes_text(ps: &[MonomialPrime], names: &VarNames) -> String {
    ps.iter().map(|p| render_prime(p, names) + "\n").collect()
}

fn ideal_json(i: &MonomialIdeal, names: &VarNames) -> Value {
    json!({ "ring_dim": i.ring_dim(), "generators": i.generators(), "text": render_ideal(i, names) })
}

fn set_text(s: VarSet, names: &VarNames) -> String {
    s.iter().map(|v| names.name(v)).collect::<Vec<_>>().join(" ")
}

fn run(command: Command, budget: &Budget) -> Result<Outcome, Error> {
    match command {
        Command::Ass { src, t, oracle } => {
            let inp = src.load()?;
            let power = inp.ideal().power(t)?;
            let ass = if oracle { ass_witness_oracle(&power, budget.max_box)? } else { associated_primes(&power)? };
            let names = &inp.names;
            let witnesses: Vec<Value> = ass
                .witnesses
                .iter()
                .map(|w| json!({ "prime": prime_json(&w.prime, names), "monomial": render_monomial(&w.monomial, names) }))
                .collect();
            let mut text = String::new();
            for p in &ass.primes {
                match ass.witness(p) {
                    Some(c) => writeln!(text, "{}  witness {}", render_prime(p, names), render_monomial(c, names)),
                    None => writeln!(text, "{}", render_prime(p, names)),
                }
                .expect("writing to a String");
            }
            let primes: Vec<Value> = ass.primes.iter().map(|p| prime_json(p, names)).collect();
            Ok(Outcome::new(text, json!({ "t": t, "primes": primes, "witnesses": witnesses })))
        }
        Command::MinPrimes { src } => {
            let inp = src.load()?;
            let min = minimal_primes(&inp.ideal())?;
            let primes: Vec<Value> = min.iter().map(|p| prime_json(p, &inp.names)).collect();
            Ok(Outcome::new(primes_text(&min, &inp.names), json!({ "primes": primes })))
        }
        Command::Power { src, t } => {
            let inp = src.load()?;
            let p = inp.ideal().power(t)?;
            Ok(Outcome::new(render_ideal(&p, &inp.names) + "\n", ideal_json(&p, &inp.names)))
        }
        Command::Symbolic { src, t } => {
            let inp = src.load()?;
            let ideal = inp.square_free()?;
            let s = symbolic_power(&ideal, t)?;
            let mut j = ideal_json(&s, &inp.names);
            j["equals_power"] = json!(s == ideal.power(t)?);
            Ok(Outcome::new(render_ideal(&s, &inp.names) + "\n", j))
        }
        Command::Colon { src, by, t } => {
            let inp = src.load()?;
            let m = inp.monomial(&by)?;
            let c = inp.ideal().power(t)?.colon_by_monomial(&m)?;
            Ok(Outcome::new(render_ideal(&c, &inp.names) + "\n", ideal_json(&c, &inp.names)))
        }
        Command::Polarize { src, t } => {
            let inp = src.load()?;
            let (ctx, pol) = polarize_ideal(&inp.ideal().power(t)?)?;
            let base = inp.names.namer();
            let shadow_names: Vec<String> = (0..ctx.polar_dim()).map(|i| ctx.shadow_name(i, &base)).collect();
            let pnames = VarNames::new(shadow_names.clone())?;
            let vars: Vec<Value> = (0..ctx.polar_dim())
                .map(|i| {
                    let s = ctx.shadow_of(i);
                    json!({ "name": shadow_names[i], "base": s.base.0, "copy": s.copy })
                })
                .collect();
            let mut j = ideal_json(&pol, &pnames);
            j["variables"] = json!(vars);
            Ok(Outcome::new(render_ideal(&pol, &pnames) + "\n", j))
        }
        Command::Minor { src, delete, contract } => {
            let inp = src.load()?;
            let h = inp.hypergraph()?;
            let spec = MinorSpec::new(inp.var_set(&delete)?, inp.var_set(&contract)?)?;
            let names = &inp.names;
            Ok(match h.apply_minor(&spec)? {
                MinorResult::Proper(m) => {
                    let ideal = m.edge_ideal::<u16>();
                    let mut j = ideal_json(&ideal, names);
                    j["kind"] = json!("proper");
                    j["edges"] = json!(m.edges());
                    Outcome::new(render_ideal(&ideal, names) + "\n", j)
                }
                MinorResult::ZeroIdeal => Outcome::new("(0)\n".into(), json!({ "kind": "zero" })),
                MinorResult::UnitIdeal => Outcome::new("(1)\n".into(), json!({ "kind": "unit" })),
            })
        }
        Command::Invariants { src } => {
            let inp = src.load()?;
            let h = inp.hypergraph()?;
            let names = &inp.names;
            let (alpha0, cover) = h.alpha0()?;
            let (beta1, matching) = h.beta1()?;
            let ideal = h.edge_ideal::<u16>();
            let min = minimal_primes(&ideal)?;
            let unmixed = min.windows(2).all(|w| w[0].height() == w[1].height());
            let comps = h.without_isolated().connected_components().len();
            let edges: Vec<String> = matching.iter().map(|e| format!("{{{}}}", set_text(*e, names))).collect();
            let mut text = String::new();
            writeln!(text, "vertices: {}", h.n_vertices()).unwrap();
            writeln!(text, "edges: {}", h.edges().len()).unwrap();
            writeln!(text, "alpha0: {alpha0} (cover: {})", set_text(cover, names)).unwrap();
            writeln!(text, "beta1: {beta1} (matching: {})", edges.join(" ")).unwrap();
            writeln!(text, "konig: {}", alpha0 == beta1).unwrap();
            writeln!(text, "unmixed: {unmixed}").unwrap();
            writeln!(text, "components: {comps}").unwrap();
            writeln!(text, "isolated vertices: {}", h.isolated_vertices().len()).unwrap();
            writeln!(text, "bound N: {}", ntf::dimension_bound(&h)).unwrap();
            let j = json!({
                "vertices": h.n_vertices(),
                "edges": h.edges(),
                "alpha0": alpha0,
                "min_cover": cover,
                "beta1": beta1,
                "matching": matching,
                "konig": alpha0 == beta1,
                "unmixed": unmixed,
                "components": comps,
                "isolated_vertices": h.isolated_vertices(),
                "bound": ntf::dimension_bound(&h),
            });
            Ok(Outcome::new(text, j))
        }
        Command::Konig { src } => {
            let inp = src.load()?;
            let h = inp.hypergraph()?;
            let (a, _) = h.alpha0()?;
            let (b, _) = h.beta1()?;
            let holds = a == b;
            Ok(Outcome {
                text: format!("konig: {holds} (alpha0 {a}, beta1 {b})\n"),
                json: json!({ "konig": holds, "alpha0": a, "beta1": b }),
                holds: Some(holds),
            })
        }
        Command::Packing { src } => {
            let inp = src.load()?;
            let h = inp.hypergraph()?;
            ntf::check_minor_budget(&h, budget)?;
            let p = h.packing()?;
            let mut text = format!("packing: {}\n", p.holds);
            if let Some(s) = &p.failing_minor {
                if s.is_identity() {
                    text.push_str("konig fails on the hypergraph itself\n");
                } else {
                    writeln!(
                        text,
                        "konig fails on the minor: delete [{}], contract [{}]",
                        set_text(s.delete, &inp.names),
                        set_text(s.contract, &inp.names)
                    )
                    .unwrap();
                }
            }
            Ok(Outcome { text, json: json!(p), holds: Some(p.holds) })
        }
        Command::Ntf { src, bound, rule } => {
            let inp = src.load()?;
            let ideal = inp.square_free()?;
            let h = inp.hypergraph()?;
            let n = match bound {
                Some(n) => n,
                None => ntf::bound_for(&h, rule.into(), budget)?,
            };
            let v = ntf::ntf_verdict(&ideal, n, budget)?;
            let names = &inp.names;
            let mut text = String::new();
            for r in &v.per_power {
                let emb = if r.embedded.is_empty() {
                    String::new()
                } else {
                    let e: Vec<String> = r.embedded.iter().map(|p| render_prime(p, names)).collect();
                    format!("  embedded: {}", e.join(", "))
                };
                writeln!(text, "t={}: {} associated primes{emb}", r.t, r.ass.len()).unwrap();
            }
            match v.onset {
                None => writeln!(text, "certified NTF up to {n}").unwrap(),
                Some(o) => writeln!(text, "not NTF: embedded prime at t={o}").unwrap(),
            }
            Ok(Outcome { text, json: json!(v), holds: Some(v.onset.is_none()) })
        }
        Command::Analyze { src, bound, rule } => {
            let inp = src.load()?;
            let ideal = inp.square_free()?;
            let cfg = AnalysisConfig { rule: rule.into(), bound, budget: *budget };
            let report = analyze(&ideal, &inp.names, &cfg)?;
            Ok(Outcome::new(report.to_text(), serde_json::to_value(&report).expect("report serializes")))
        }
        Command::Search {
            d_max,
            edge_size,
            max_edges,
            no_dedup,
            predicate,
            skip_unmixed,
            no_onset_check,
            max_candidates,
            resume,
        } => {
            let sizes = parse_range(&edge_size)?;
            let predicate = match predicate {
                PredicateArg::MinimallyNonPacking => Predicate::MinimallyNonPacking,
                PredicateArg::OnsetEqualsBeta1PlusOne => Predicate::OnsetEqualsBeta1PlusOne,
                PredicateArg::NtfViolation => Predicate::NtfViolation,
            };
            let mut cfg = SearchConfig::new(d_max, sizes, predicate);
            cfg.max_edges = max_edges;
            cfg.dedup = if no_dedup { Dedup::None } else { Dedup::PermutationCanonical };
            cfg.skip_unmixed = skip_unmixed;
            cfg.check_onset = !no_onset_check;
            cfg.max_candidates = max_candidates;
            cfg.resume = resume.as_deref().map(str::parse::<ResumeToken>).transpose()?;
            cfg.budget = *budget;
            let out = search(&cfg)?;
            let mut text = String::new();
            for hit in &out.hits {
                let names = VarNames::standard(hit.hypergraph.n_vertices());
                let edges = render_edge_list(&hit.hypergraph, &names).trim_end().replace('\n', " / ");
                let check = match &hit.onset_check {
                    Some(c) => format!(" onset-check={:?}", c.status).to_lowercase(),
                    None => String::new(),
                };
                writeln!(
                    text,
                    "d={} [{edges}] alpha0={} beta1={} unmixed={} good_edge={} onset={}{check}",
                    hit.hypergraph.n_vertices(),
                    hit.alpha0,
                    hit.beta1,
                    hit.unmixed,
                    hit.good_edge.as_ref().map_or("none".into(), |g| render_monomial(g, &names)),
                    hit.onset.map_or("none".into(), |o| o.to_string()),
                )
                .unwrap();
            }
            writeln!(text, "{} hit(s), {} candidate(s) evaluated", out.hits.len(), out.candidates_evaluated).unwrap();
            if let Some(t) = out.resume {
                writeln!(text, "stopped on budget; resume with --resume {t}").unwrap();
            }
            Ok(Outcome::new(text, json!(out)))
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Usage(format!("edge size {s:?} is not N or N..M"));
    match s.split_once("..") {
        Some((a, b)) => Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok((n, n))
        }
    }
}
