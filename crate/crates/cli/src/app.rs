//! Command-line definition and the commands themselves.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use sact_core::classifiers::{ClassifierReport, Property};
use sact_core::projectivity::default_cover_bound;
use sact_core::{
    decompose, enumerate_acts, enumerate_monoids_with_zero, functor_f_obj, is_cyclic, is_hollow,
    is_locally_cyclic, is_projective, projective_cover, substantial_summand, Act, Category, Monoid,
    Subact,
};
use serde::Serialize;

use crate::dot::cayley_dot;
use crate::error::Result;
use crate::format::{print_act, print_monoid};
use crate::verify::run_checks;
use crate::workspace::Workspace;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "sact",
    version,
    about = "Finite monoids with zero and their acts"
)]
pub struct Cli {
    /// Monoid/act file to load (repeatable, loaded in order)
    #[arg(short = 'f', long = "file", global = true, value_name = "PATH")]
    pub files: Vec<PathBuf>,
    /// Search bound override, e.g. `act-size=3` (repeatable)
    #[arg(long = "bounds", global = true, value_name = "KEY=VALUE")]
    pub bounds: Vec<String>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Preload the built-in example monoids and acts
    #[arg(long, global = true)]
    pub seed_fixtures: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that all loaded files parse and validate
    Validate,
    /// Structural report for one act
    Analyze {
        act: String,
        #[arg(long)]
        category: Option<Category>,
    },
    /// The zero-glued act F(A) = A/0A and its projection
    FunctorF { act: String },
    /// Search for a projective cover
    Cover {
        act: String,
        #[arg(long)]
        category: Option<Category>,
    },
    /// Monoid-level verdicts over all small acts
    Classify {
        monoid: String,
        /// Limit to one property (repeatable)
        #[arg(long = "property")]
        properties: Vec<Property>,
    },
    /// List objects up to isomorphism
    Enumerate {
        #[command(subcommand)]
        what: EnumerateWhat,
    },
    /// Run the full property battery
    VerifyPaper,
    /// Cayley graph in DOT
    Dot { act: String },
}

#[derive(Debug, Subcommand)]
pub enum EnumerateWhat {
    /// Monoids with zero of a given order
    Monoids {
        #[arg(long)]
        size: usize,
    },
    /// Acts over a loaded monoid, up to a given size
    Acts {
        #[arg(long)]
        monoid: String,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value = "acto")]
        category: Category,
    },
}

/// What a command printed and whether a checked property failed.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub property_failed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> u8 {
        u8::from(self.property_failed)
    }
}

fn emit<T: Serialize>(json: bool, report: &T, text: impl FnOnce() -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text()
    }
}

fn labels_of(sub: &Subact, act: &Act) -> Vec<String> {
    sub.labels(act).into_iter().map(str::to_owned).collect()
}

/// Builds the workspace from the global flags.
pub fn load(cli: &Cli) -> Result<Workspace> {
    let mut ws = Workspace::new();
    for b in &cli.bounds {
        ws.bounds.set(b)?;
    }
    if cli.seed_fixtures {
        ws.seed_fixtures()?;
    }
    for f in &cli.files {
        ws.load_file(f)?;
    }
    Ok(ws)
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let ws = load(cli)?;
    let json = cli.json;
    let stdout = match &cli.command {
        Command::Validate => validate(&ws, json),
        Command::Analyze { act, category } => analyze(&ws, act, *category, json)?,
        Command::FunctorF { act } => functor_f(&ws, act, json)?,
        Command::Cover { act, category } => cover(&ws, act, *category, json)?,
        Command::Classify { monoid, properties } => return classify(&ws, monoid, properties, json),
        Command::Enumerate { what } => enumerate(&ws, what, json)?,
        Command::VerifyPaper => return Ok(verify_paper(&ws, json)),
        Command::Dot { act } => {
            let named = ws.act_named(act)?;
            let dot = cayley_dot(act, &named.act);
            emit(
                json,
                &DotReport {
                    schema: SCHEMA,
                    act,
                    dot: &dot,
                },
                || dot.clone(),
            )
        }
    };
    Ok(Outcome {
        stdout,
        property_failed: false,
    })
}

#[derive(Serialize)]
struct DotReport<'a> {
    schema: u32,
    act: &'a str,
    dot: &'a str,
}

#[derive(Serialize)]
struct ValidateReport<'a> {
    schema: u32,
    monoids: Vec<MonoidSummary<'a>>,
    acts: Vec<ActSummary<'a>>,
}

#[derive(Serialize)]
struct MonoidSummary<'a> {
    name: &'a str,
    size: usize,
}

#[derive(Serialize)]
struct ActSummary<'a> {
    name: &'a str,
    monoid: &'a str,
    category: &'static str,
    size: usize,
}

fn validate(ws: &Workspace, json: bool) -> String {
    let report = ValidateReport {
        schema: SCHEMA,
        monoids: ws
            .monoids()
            .map(|(name, m)| MonoidSummary {
                name,
                size: m.size(),
            })
            .collect(),
        acts: ws
            .acts()
            .map(|(name, a)| ActSummary {
                name,
                monoid: &a.monoid,
                category: a.act.category().as_str(),
                size: a.act.size(),
            })
            .collect(),
    };
    emit(json, &report, || {
        let mut out = String::new();
        for m in &report.monoids {
            let _ = writeln!(out, "monoid {}: ok ({} elements)", m.name, m.size);
        }
        for a in &report.acts {
            let _ = writeln!(
                out,
                "act {} over {} ({}): ok ({} elements)",
                a.name, a.monoid, a.category, a.size
            );
        }
        out
    })
}

#[derive(Serialize)]
struct AnalyzeReport<'a> {
    schema: u32,
    act: &'a str,
    monoid: &'a str,
    category: &'static str,
    size: usize,
    zero_set: Vec<String>,
    cyclic: Option<String>,
    locally_cyclic: bool,
    hollow: bool,
    decomposition: DecompositionReport,
    projective: Option<Vec<SummandReport>>,
    substantial_summand: SubstantialReport,
}

#[derive(Serialize)]
struct DecompositionReport {
    indecomposable: bool,
    components: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct SummandReport {
    component: Vec<String>,
    idempotent: String,
}

#[derive(Serialize)]
struct SubstantialReport {
    substantial: Vec<String>,
    discrete_zeros: Vec<String>,
}

fn analyze(ws: &Workspace, name: &str, category: Option<Category>, json: bool) -> Result<String> {
    let named = ws.act_named(name)?;
    let category = category.unwrap_or(named.act.category());
    let act = named.act.view(category)?;
    let dec = decompose(&act, category)?;
    let projective = is_projective(&act, category)?.map(|cert| {
        cert.summands
            .iter()
            .map(|s| SummandReport {
                component: labels_of(&s.component, &act),
                idempotent: act.monoid().label(s.idempotent).to_owned(),
            })
            .collect()
    });
    let sub = substantial_summand(&act)?;
    let report = AnalyzeReport {
        schema: SCHEMA,
        act: name,
        monoid: &named.monoid,
        category: category.as_str(),
        size: act.size(),
        zero_set: labels_of(&act.zero_set(), &act),
        cyclic: is_cyclic(&act)?.map(|g| act.label(g).to_owned()),
        locally_cyclic: is_locally_cyclic(&act)?,
        hollow: is_hollow(&act, category)?,
        decomposition: DecompositionReport {
            indecomposable: dec.is_indecomposable(),
            components: dec.components.iter().map(|c| labels_of(c, &act)).collect(),
        },
        projective,
        substantial_summand: SubstantialReport {
            substantial: labels_of(&sub.substantial, &act),
            discrete_zeros: sub
                .discrete_zeros
                .iter()
                .map(|&z| act.label(z).to_owned())
                .collect(),
        },
    };
    Ok(emit(json, &report, || {
        let list = |v: &[String]| format!("{{{}}}", v.join(", "));
        let mut out = String::new();
        let _ = writeln!(
            out,
            "act: {} over {} ({})",
            report.act, report.monoid, report.category
        );
        let _ = writeln!(out, "size: {}", report.size);
        let _ = writeln!(out, "zero_set: {}", list(&report.zero_set));
        let _ = writeln!(
            out,
            "cyclic: {}",
            report
                .cyclic
                .as_deref()
                .map_or("no".into(), |g| format!("generated by {g}"))
        );
        let _ = writeln!(out, "locally_cyclic: {}", report.locally_cyclic);
        let _ = writeln!(out, "hollow: {}", report.hollow);
        let _ = writeln!(
            out,
            "indecomposable: {}",
            report.decomposition.indecomposable
        );
        let comps: Vec<String> = report
            .decomposition
            .components
            .iter()
            .map(|c| list(c))
            .collect();
        let _ = writeln!(out, "components: {} {}", comps.len(), comps.join(" "));
        match &report.projective {
            Some(parts) => {
                let parts: Vec<String> = parts
                    .iter()
                    .map(|p| format!("{} ≅ S·{}", list(&p.component), p.idempotent))
                    .collect();
                let _ = writeln!(out, "projective: {}", parts.join(", "));
            }
            None => out.push_str("projective: no\n"),
        }
        let _ = writeln!(
            out,
            "substantial_summand: {} + {} discrete zero(s)",
            list(&report.substantial_summand.substantial),
            report.substantial_summand.discrete_zeros.len()
        );
        out
    }))
}

#[derive(Serialize)]
struct TableReport {
    name: String,
    elements: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    one: Option<String>,
    zero: Option<String>,
    table: Vec<Vec<String>>,
}

fn act_table(name: String, act: &Act) -> TableReport {
    TableReport {
        name,
        elements: act.labels().to_vec(),
        one: None,
        zero: act.zero().map(|z| act.label(z).to_owned()),
        table: act
            .monoid()
            .elements()
            .map(|s| {
                act.row(s)
                    .iter()
                    .map(|&b| act.label(b).to_owned())
                    .collect()
            })
            .collect(),
    }
}

fn monoid_table(name: String, m: &Monoid) -> TableReport {
    TableReport {
        name,
        elements: m.labels().to_vec(),
        one: Some(m.label(m.one()).to_owned()),
        zero: Some(m.label(m.zero()).to_owned()),
        table: m
            .elements()
            .map(|x| {
                m.elements()
                    .map(|y| m.label(m.mul(x, y)).to_owned())
                    .collect()
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct FunctorReport<'a> {
    schema: u32,
    act: &'a str,
    image: TableReport,
    projection: Vec<[String; 2]>,
}

fn functor_f(ws: &Workspace, name: &str, json: bool) -> Result<String> {
    let named = ws.act_named(name)?;
    let (fa, pi) = functor_f_obj(&named.act)?;
    let image_name = format!("F_{name}");
    let projection: Vec<[String; 2]> = named
        .act
        .elements()
        .map(|a| {
            [
                named.act.label(a).to_owned(),
                fa.label(pi.apply(a)).to_owned(),
            ]
        })
        .collect();
    let report = FunctorReport {
        schema: SCHEMA,
        act: name,
        image: act_table(image_name.clone(), &fa),
        projection,
    };
    Ok(emit(json, &report, || {
        let pairs: Vec<String> = report
            .projection
            .iter()
            .map(|[a, b]| format!("{a} -> {b}"))
            .collect();
        format!(
            "{}# projection: {}\n",
            print_act(&image_name, &named.monoid, &fa),
            pairs.join(", ")
        )
    }))
}

#[derive(Serialize)]
struct CoverReport<'a> {
    schema: u32,
    act: &'a str,
    category: &'static str,
    bound: usize,
    found: bool,
    domain: Option<CoverDomain>,
}

#[derive(Serialize)]
struct CoverDomain {
    summands: Vec<String>,
    elements: Vec<String>,
    map: Vec<[String; 2]>,
    evidence: Vec<Evidence>,
}

#[derive(Serialize)]
struct Evidence {
    maximal_subact: Vec<String>,
    missed: String,
}

fn cover(ws: &Workspace, name: &str, category: Option<Category>, json: bool) -> Result<String> {
    let named = ws.act_named(name)?;
    let category = category.unwrap_or(named.act.category());
    let act = named.act.view(category)?;
    let bound = ws
        .bounds
        .cover_size
        .unwrap_or_else(|| default_cover_bound(act.size(), act.monoid().size(), category));
    let found = projective_cover(&act, category, Some(bound))?;
    let domain = match &found {
        None => None,
        Some(c) => {
            let p = c.epi.source();
            let cert = is_projective(p, category)?.expect("cover domains are projective");
            Some(CoverDomain {
                summands: cert
                    .summands
                    .iter()
                    .map(|s| act.monoid().label(s.idempotent).to_owned())
                    .collect(),
                elements: p.labels().to_vec(),
                map: p
                    .elements()
                    .map(|x| [p.label(x).to_owned(), act.label(c.epi.apply(x)).to_owned()])
                    .collect(),
                evidence: c
                    .evidence
                    .iter()
                    .map(|(m, missed)| Evidence {
                        maximal_subact: labels_of(m, p),
                        missed: act.label(*missed).to_owned(),
                    })
                    .collect(),
            })
        }
    };
    let report = CoverReport {
        schema: SCHEMA,
        act: name,
        category: category.as_str(),
        bound,
        found: domain.is_some(),
        domain,
    };
    Ok(emit(json, &report, || match &report.domain {
        None => {
            format!("no projective cover of {name} in {category} with at most {bound} elements\n")
        }
        Some(d) => {
            let sum: Vec<String> = d.summands.iter().map(|e| format!("S·{e}")).collect();
            let map: Vec<String> = d.map.iter().map(|[x, y]| format!("{x} -> {y}")).collect();
            format!(
                "projective cover of {name} in {category}: {} ({} elements)\nmap: {}\n",
                sum.join(" + "),
                d.elements.len(),
                map.join(", ")
            )
        }
    }))
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    schema: u32,
    monoid: &'a str,
    reports: Vec<PropertyReport>,
}

#[derive(Serialize)]
struct PropertyReport {
    property: &'static str,
    verdict: &'static str,
    act_size: usize,
    acts_checked: usize,
    witnesses: Vec<WitnessReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chain_profile: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct WitnessReport {
    reason: String,
    act: TableReport,
}

fn property_report(r: &ClassifierReport) -> PropertyReport {
    PropertyReport {
        property: r.property.as_str(),
        verdict: r.verdict.as_str(),
        act_size: r.bounds.act_size,
        acts_checked: r.acts_checked,
        witnesses: r
            .witnesses
            .iter()
            .enumerate()
            .map(|(i, w)| WitnessReport {
                reason: w.reason.to_string(),
                act: act_table(format!("witness{}", i + 1), &w.act),
            })
            .collect(),
        chain_profile: r.chain_profile.clone(),
    }
}

fn classify(ws: &Workspace, name: &str, properties: &[Property], json: bool) -> Result<Outcome> {
    let m = ws.monoid_named(name)?;
    let props: Vec<Property> = if properties.is_empty() {
        Property::ALL.to_vec()
    } else {
        properties.to_vec()
    };
    let mut reports = Vec::new();
    for p in props {
        let size = ws.bounds.act_size.unwrap_or_else(|| p.default_act_size());
        let r = p.classify(&m, size)?;
        reports.push(property_report(&r));
    }
    let failed = reports.iter().any(|r| r.verdict == "fails");
    let report = ClassifyReport {
        schema: SCHEMA,
        monoid: name,
        reports,
    };
    let stdout = emit(json, &report, || {
        let mut out = String::new();
        for r in &report.reports {
            let _ = write!(
                out,
                "{}: {} (acts up to size {}, {} checked)",
                r.property, r.verdict, r.act_size, r.acts_checked
            );
            if let Some(p) = &r.chain_profile {
                let _ = write!(out, "; longest chain {}", p.len().saturating_sub(1));
            }
            out.push('\n');
            for w in &r.witnesses {
                let _ = writeln!(out, "  witness: {}", w.reason);
            }
        }
        out
    });
    Ok(Outcome {
        stdout,
        property_failed: failed,
    })
}

#[derive(Serialize)]
struct EnumerateReport {
    schema: u32,
    kind: &'static str,
    count: usize,
    items: Vec<TableReport>,
}

fn enumerate(ws: &Workspace, what: &EnumerateWhat, json: bool) -> Result<String> {
    match what {
        EnumerateWhat::Monoids { size } => {
            let found = enumerate_monoids_with_zero(*size)?;
            let names: Vec<String> = (1..=found.len()).map(|i| format!("M{size}_{i}")).collect();
            let report = EnumerateReport {
                schema: SCHEMA,
                kind: "monoids",
                count: found.len(),
                items: found
                    .iter()
                    .zip(&names)
                    .map(|(m, n)| monoid_table(n.clone(), m))
                    .collect(),
            };
            Ok(emit(json, &report, || {
                found
                    .iter()
                    .zip(&names)
                    .map(|(m, n)| print_monoid(n, m))
                    .collect::<Vec<_>>()
                    .join("\n")
            }))
        }
        EnumerateWhat::Acts {
            monoid,
            size,
            category,
        } => {
            let m: Arc<Monoid> = ws.monoid_named(monoid)?;
            let found: Vec<Act> = enumerate_acts(&m, *size, *category)?
                .into_iter()
                .filter(|a| !a.is_empty())
                .collect();
            let names: Vec<String> = (1..=found.len())
                .map(|i| format!("{monoid}_act{i}"))
                .collect();
            let report = EnumerateReport {
                schema: SCHEMA,
                kind: "acts",
                count: found.len(),
                items: found
                    .iter()
                    .zip(&names)
                    .map(|(a, n)| act_table(n.clone(), a))
                    .collect(),
            };
            Ok(emit(json, &report, || {
                found
                    .iter()
                    .zip(&names)
                    .map(|(a, n)| print_act(n, monoid, a))
                    .collect::<Vec<_>>()
                    .join("\n")
            }))
        }
    }
}

#[derive(Serialize)]
struct VerifyReport {
    schema: u32,
    passed: bool,
    checks: Vec<crate::verify::Check>,
}

fn verify_paper(ws: &Workspace, json: bool) -> Outcome {
    let checks = run_checks(&ws.bounds);
    let passed = checks.iter().all(|c| c.passed);
    let report = VerifyReport {
        schema: SCHEMA,
        passed,
        checks,
    };
    let stdout = emit(json, &report, || {
        let mut out = String::new();
        for c in &report.checks {
            let _ = writeln!(
                out,
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
        out
    });
    Outcome {
        stdout,
        property_failed: !passed,
    }
}
