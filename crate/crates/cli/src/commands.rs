use std::io::Write;
use std::str::FromStr;

use anyhow::{bail, Context};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use flatbraid::braid::{
    free_reduce_braid, fvp3_normal_form, normal_generators_intersection, rewrite_to_lambda,
    rewrite_to_x, to_abc,
};
use flatbraid::fox::apply_linear;
use flatbraid::invariant::link_invariant;
use flatbraid::reps::{
    gauss_image, kernel_witness_check, switch_axiom_check, verify_defining_relations,
    RelationReport,
};
use flatbraid::{apply_rep, BraidMode, BraidWord, Error, LinearKind, RepKind};

use crate::{BraidInput, Target};

/// A representation selector: an automorphism representation or a linear one.
#[derive(Debug, Clone, Copy)]
pub enum Selector {
    Automorphism(RepKind),
    Linear(LinearKind),
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.parse()
            .map(Selector::Automorphism)
            .or_else(|_| s.parse().map(Selector::Linear))
    }
}

impl std::fmt::Display for Selector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Selector::Automorphism(k) => k.fmt(f),
            Selector::Linear(k) => k.fmt(f),
        }
    }
}

/// Result of one unit of work: its text rendering, its JSON form, and whether
/// it counts as success for the exit code.
pub struct Item {
    text: String,
    json: Value,
    ok: bool,
}

impl Item {
    fn new(text: impl Into<String>, json: Value, ok: bool) -> Self {
        Item {
            text: text.into(),
            json,
            ok,
        }
    }
}

pub struct Outcome {
    /// `(input line, result)` per braid in batch mode.
    batch: Option<Vec<(String, Result<Item, String>)>>,
    single: Option<Item>,
    json: bool,
}

impl Outcome {
    fn single(item: Item) -> Self {
        Outcome {
            batch: None,
            single: Some(item),
            json: false,
        }
    }

    pub fn with_json(self, json: bool) -> Self {
        Outcome { json, ..self }
    }

    /// Writes the outcome to stdout and returns the exit code. A closed
    /// stdout (for example a pipe into `head`) is not an error.
    pub fn print(self) -> u8 {
        let (out, code) = self.render();
        let _ = std::io::stdout().lock().write_all(out.as_bytes());
        code
    }

    fn render(self) -> (String, u8) {
        if let Some(item) = self.single {
            let body = if self.json {
                pretty(&item.json)
            } else {
                item.text
            };
            return (format!("{body}\n"), u8::from(!item.ok));
        }
        let items = self.batch.unwrap_or_default();
        let all_ok = items.iter().all(|(_, r)| r.as_ref().is_ok_and(|i| i.ok));
        let out = if self.json {
            let arr: Vec<Value> = items
                .into_iter()
                .map(|(input, r)| match r {
                    Ok(i) => json!({ "input": input, "ok": i.ok, "result": i.json }),
                    Err(e) => json!({ "input": input, "ok": false, "error": e }),
                })
                .collect();
            format!("{}\n", pretty(&Value::Array(arr)))
        } else {
            let blocks: Vec<String> = items
                .into_iter()
                .map(|(input, r)| match r {
                    Ok(i) => format!("# {input}\n{}\n", i.text),
                    Err(e) => format!("# {input}\nerror: {e}\n"),
                })
                .collect();
            blocks.join("\n")
        };
        (out, u8::from(!all_ok))
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output types serialize")
}

/// Runs `f` on the braid given by `--braid`, or on every braid of `--file`
/// in parallel, keeping the input order.
pub fn batch<F>(input: &BraidInput, f: F) -> anyhow::Result<Outcome>
where
    F: Fn(&BraidWord) -> anyhow::Result<Item> + Sync,
{
    if let Some(text) = &input.braid {
        let b = BraidWord::parse(text, input.n)?;
        return Ok(Outcome::single(f(&b)?));
    }
    let path = input
        .file
        .as_ref()
        .expect("clap requires --braid or --file");
    let content =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let lines: Vec<&str> = content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results = lines
        .par_iter()
        .map(|line| {
            let r = BraidWord::parse(line, input.n)
                .map_err(anyhow::Error::from)
                .and_then(|b| f(&b))
                .map_err(|e| format!("{e:#}"));
            (line.to_string(), r)
        })
        .collect();
    Ok(Outcome {
        batch: Some(results),
        single: None,
        json: false,
    })
}

pub fn parse_item(b: &BraidWord, mode: BraidMode) -> anyhow::Result<Item> {
    let r = free_reduce_braid(b, mode);
    let json = json!({
        "n": r.strands(),
        "mode": mode,
        "braid": r.to_string(),
        "length": r.len(),
    });
    Ok(Item::new(r.to_string(), json, true))
}

fn automorphism(sel: &Selector, command: &str) -> anyhow::Result<RepKind> {
    match sel {
        Selector::Automorphism(k) => Ok(*k),
        Selector::Linear(k) => {
            bail!("{command} needs an automorphism representation; {k} is linear, use `matrix`")
        }
    }
}

pub fn act_item(b: &BraidWord, sel: &Selector) -> anyhow::Result<Item> {
    let rep = automorphism(sel, "act")?.build(b.strands())?;
    let e = apply_rep(&rep, b)?;
    let json = json!({
        "representation": rep.name(),
        "n": b.strands(),
        "braid": b.to_string(),
        "image": e,
    });
    Ok(Item::new(e.to_string(), json, true))
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    #[serde(flatten)]
    report: &'a RelationReport,
    defining_hold: bool,
}

pub fn verify(n: usize, sel: &Selector, mode: BraidMode) -> anyhow::Result<Outcome> {
    let report = match sel {
        Selector::Automorphism(k) => verify_defining_relations(&k.build(n)?, mode),
        Selector::Linear(k) => verify_defining_relations(&k.build(n)?, mode),
    };
    let ok = report.defining_hold();
    let json = to_json(&VerifyOutput {
        report: &report,
        defining_hold: ok,
    });
    Ok(Outcome::single(Item::new(report.to_string(), json, ok)))
}

pub fn kernel_item(b: &BraidWord, sel: &Selector) -> anyhow::Result<Item> {
    let identity = match sel {
        Selector::Automorphism(k) => kernel_witness_check(&k.build(b.strands())?, b)?,
        Selector::Linear(k) => apply_linear(&k.build(b.strands())?, b)?.is_identity(),
    };
    let json = json!({
        "representation": sel.to_string(),
        "n": b.strands(),
        "braid": b.to_string(),
        "identity": identity,
    });
    let text = if identity { "identity" } else { "not identity" };
    Ok(Item::new(text, json, identity))
}

pub fn rewrite_item(b: &BraidWord, to: Target, mode: BraidMode) -> anyhow::Result<Item> {
    let base = json!({ "n": b.strands(), "braid": b.to_string() });
    let mut json = base;
    let text = match to {
        Target::Lambda => {
            let w = rewrite_to_lambda(b, mode)?;
            json["target"] = json!("lambda");
            json["word"] = to_json(&w);
            json["text"] = json!(w.to_string());
            w.to_string()
        }
        Target::X => {
            let w = rewrite_to_x(b)?;
            json["target"] = json!("x");
            json["word"] = to_json(&w);
            json["text"] = json!(w.to_string());
            w.to_string()
        }
        Target::Abc => {
            if b.strands() != 3 {
                bail!("--to abc needs a braid on 3 strands");
            }
            let lw = rewrite_to_lambda(b, mode)?;
            let w = to_abc(&lw)?;
            let nf = fvp3_normal_form(&w)?;
            json["target"] = json!("abc");
            json["lambda"] = json!(lw.to_string());
            json["word"] = json!(w.to_string());
            json["normal_form"] = to_json(&nf);
            json["normal_form_text"] = json!(nf.to_string());
            json["trivial"] = json!(nf.is_trivial());
            format!("{w}\nnormal form: {nf}")
        }
    };
    Ok(Item::new(text, json, true))
}

pub fn matrix_item(b: &BraidWord, sel: &Selector) -> anyhow::Result<Item> {
    let kind = match sel {
        Selector::Linear(k) => *k,
        Selector::Automorphism(k) => bail!(
            "matrix needs one of {}; {k} is an automorphism representation, use `act`",
            LinearKind::SELECTORS.join(", ")
        ),
    };
    let rep = kind.build(b.strands())?;
    let m = apply_linear(&rep, b)?;
    let json = json!({
        "representation": kind.to_string(),
        "n": b.strands(),
        "braid": b.to_string(),
        "layout": rep.layout(),
        "basis": rep.basis(),
        "matrix": m,
    });
    Ok(Item::new(m.to_string(), json, true))
}

pub fn invariant_item(b: &BraidWord) -> anyhow::Result<Item> {
    let inv = link_invariant(b)?;
    let json = json!({
        "n": b.strands(),
        "braid": b.to_string(),
        "presentation": inv.presentation,
        "abelian": inv.abelian,
        "abelian_text": inv.abelian.to_string(),
    });
    Ok(Item::new(inv.to_string(), json, true))
}

pub fn switch_check() -> Outcome {
    let report = switch_axiom_check();
    let ok = report.all_hold();
    let mut json = to_json(&report);
    json["all_hold"] = json!(ok);
    Outcome::single(Item::new(report.to_string(), json, ok))
}

pub fn gauss_item(b: &BraidWord) -> anyhow::Result<Item> {
    let g = gauss_image(b)?;
    let mut json = to_json(&g);
    json["n"] = json!(b.strands());
    json["braid"] = json!(b.to_string());
    Ok(Item::new(g.to_string(), json, true))
}

pub fn normal_gens(n: usize, mode: BraidMode) -> anyhow::Result<Outcome> {
    let gens = normal_generators_intersection(n, mode)?;
    let lines: Vec<String> = gens
        .iter()
        .map(|g| {
            let family = to_json(&g.family);
            format!(
                "{:<16} {}  =  {}",
                family.as_str().unwrap_or_default(),
                g.lambda_word,
                g.braid
            )
        })
        .collect();
    let json = json!({ "n": n, "mode": mode, "generators": gens });
    Ok(Outcome::single(Item::new(lines.join("\n"), json, true)))
}
