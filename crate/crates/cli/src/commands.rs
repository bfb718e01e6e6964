use std::time::Instant;

use dynred::algebra::{Element, Generator};
use dynred::dra::{self, DraAlgebra, DraConfig, Family};
use dynred::weyl::{WeylAlgebra, WeylConfig};
use dynred::{Coeff, SuiteConfig, SuiteReport};
use serde::Serialize;

use crate::verify::Stats;
use crate::{guard, AlgebraKind, CentralArgs, CliError, CliResult, Format, GeneratorSet, NormalFormArgs, Outcome, RelationsArgs};

const MAX_N: usize = 6;
const MAX_COPIES: usize = 4;
const MAX_POWER: u32 = 6;

#[derive(Serialize)]
struct Term {
    word: String,
    coeff: String,
}

#[derive(Serialize)]
struct Relation {
    lhs_word: String,
    rhs_terms: Vec<Term>,
}

fn word_text<G: Generator>(w: &[G]) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
    }
}

fn terms<G: Generator>(e: &Element<G>) -> Vec<Term> {
    e.terms()
        .map(|(w, c): (_, &Coeff)| Term {
            word: word_text(w),
            coeff: c.serialize(),
        })
        .collect()
}

pub fn relations(args: &RelationsArgs) -> CliResult<Outcome> {
    guard(args.common.force, "n", args.n, MAX_N)?;
    let mut config = DraConfig::new(args.n);
    if args.generators == GeneratorSet::S {
        config.family = Family::S;
    }
    let alg = DraAlgebra::new(config)?;
    let rules = alg.rules();
    let text = match args.format {
        Format::Json => {
            let rels: Vec<Relation> = rules
                .iter()
                .map(|((a, b), rhs)| Relation {
                    lhs_word: word_text(&[*a, *b]),
                    rhs_terms: terms(rhs),
                })
                .collect();
            serde_json::to_string_pretty(&rels)?
        }
        Format::Text => rules
            .iter()
            .map(|((a, b), rhs)| format!("{a}*{b} = {rhs}"))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Outcome { text, passed: true })
}

#[derive(Serialize)]
struct Central {
    n: usize,
    power: u32,
    element: String,
    terms: Vec<Term>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<SuiteReport>,
}

pub fn central(args: &CentralArgs) -> CliResult<Outcome> {
    guard(args.common.force, "n", args.n, MAX_N)?;
    if args.power > MAX_POWER && !args.common.force {
        return Err(CliError::Usage(format!(
            "power = {} exceeds the guardrail {MAX_POWER}; pass --force to run anyway",
            args.power
        )));
    }
    let alg = DraAlgebra::single(args.n)?;
    let element = dra::central_element(&alg, args.power);
    let check = args.check.then(|| {
        let start = Instant::now();
        let reports = dra::check_central(&alg, args.power);
        let config = SuiteConfig {
            n: args.n,
            power: Some(args.power),
            ..Default::default()
        };
        let wall = (start.elapsed().as_secs_f64() * 1000.0).round() / 1000.0;
        SuiteReport::new("central", config, &reports, wall)
    });
    let passed = check.as_ref().is_none_or(SuiteReport::passed);
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&Central {
            n: args.n,
            power: args.power,
            element: element.to_string(),
            terms: terms(&element),
            check,
        })?,
        Format::Text => {
            let mut out = element.to_string();
            if let Some(rep) = &check {
                for c in &rep.checks {
                    let verdict = if c.failed == 0 { "PASS" } else { "FAIL" };
                    out.push_str(&format!("\n{verdict} {} ({} checked, {} failed)", c.identity, c.checked, c.failed));
                }
            }
            out
        }
    };
    Ok(Outcome { text, passed })
}

pub fn normal_form(args: &NormalFormArgs) -> CliResult<Outcome> {
    let force = args.common.force;
    guard(force, "n", args.n, MAX_N)?;
    guard(force, "N", args.copies, MAX_COPIES)?;
    let (text, json) = match args.algebra {
        AlgebraKind::Weyl => {
            let mut cfg = WeylConfig::new(args.n, args.copies);
            match args.stats {
                Stats::Bosonic => {}
                Stats::Fermionic => cfg = cfg.fermionic(),
                Stats::Both => return Err(CliError::Usage("normal-form needs one statistics".into())),
            }
            let alg = WeylAlgebra::new(cfg)?;
            let nf = alg.normal_form(&alg.parse(&args.expr)?);
            (nf.to_string(), terms(&nf))
        }
        AlgebraKind::Dra => {
            let alg = DraAlgebra::new(DraConfig::new(args.n).with_copies(args.copies))?;
            let nf = alg.try_normal_form(&alg.parse(&args.expr)?)?;
            (nf.to_string(), terms(&nf))
        }
    };
    let text = match args.format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({ "normal_form": text, "terms": json }))?,
    };
    Ok(Outcome { text, passed: true })
}
