//! Query verbs: single computations printed as text or JSON.

use fovea::covering::Covering;
use fovea::functcat::{
    complete_list, fp_hom, fp_hom_cover, functor_length_cover, kg_level0_base, simple_functor,
    simple_functor_cover, FpFunctor,
};
use fovea::labels::{base_functor, base_module, cover_functor, is_cover_label};
use fovea::modcat::{hom_dim, Module};
use fovea::repetitive::{
    repetitive_truncation, repetitive_voltage, selfinjective_orbit, selfinjectivity,
};
use fovea::suite::{load, Input, Loaded};
use fovea::FoveaError;
use serde_json::{json, Value};

use crate::{EvalArgs, Failure, FunctorArgs, Global, SimpleArgs};

/// Margin cap for length computations over the covering when `--window`
/// is absent.
const MAX_MARGIN: i64 = 16;

fn open(g: &Global, path: &str) -> Result<Loaded, Failure> {
    let input = Input::read(path)?;
    Ok(load(&input.text, &g.options())?)
}

fn emit(g: &Global, text: String, value: Value) -> Result<(), Failure> {
    if g.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("json value serializes")
        );
    } else {
        print!("{text}");
    }
    Ok(())
}

fn resolved<'a>(l: &'a Loaded, label: &'a str) -> &'a str {
    let label = label.trim();
    l.aliases()
        .iter()
        .find(|(n, _)| n == label)
        .map(|(_, v)| v.as_str())
        .unwrap_or(label)
}

/// Module labels mentioned by a functor label.
fn functor_modules(label: &str) -> Vec<&str> {
    match label.trim().split_once('@') {
        Some((_, rest)) => rest.split('>').collect(),
        None => Vec::new(),
    }
}

/// The covering, when the fixture has one and every label names a module
/// over it.
fn cover_side<'a>(l: &'a Loaded, labels: &[&str]) -> Option<&'a Covering> {
    l.covering
        .as_ref()
        .filter(|_| labels.iter().all(|m| is_cover_label(resolved(l, m))))
}

fn need_cover(l: &Loaded) -> Result<&Covering, Failure> {
    l.covering
        .as_ref()
        .ok_or_else(|| Failure::Usage("fixture has no arrow degrees".into()))
}

fn dims(m: &Module) -> String {
    let d: Vec<String> = m.dims.iter().map(usize::to_string).collect();
    format!("[{}]", d.join(" "))
}

fn base_list(g: &Global, l: &Loaded) -> Result<Vec<Module>, Failure> {
    complete_list(&l.algebra, g.dim_cap, g.count_cap)?
        .ok_or(Failure::Compute(FoveaError::IncompleteList.to_string()))
}

fn base_functor_of(g: &Global, l: &Loaded, label: &str) -> Result<FpFunctor, Failure> {
    Ok(base_functor(
        &l.algebra,
        label,
        l.aliases(),
        g.dim_cap,
        g.count_cap,
    )?)
}

fn profile_table(rows: &[(String, usize)]) -> String {
    let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(n, d)| format!("  {n:<w$}  {d}\n"))
        .collect()
}

fn base_profile(list: &[Module], t: &FpFunctor) -> Result<Vec<(String, usize)>, Failure> {
    let p = t.profile(list)?;
    Ok(list.iter().zip(p).map(|(m, d)| (dims(m), d)).collect())
}

pub fn hom(g: &Global, path: &str, from: &str, to: &str) -> Result<(), Failure> {
    let l = open(g, path)?;
    if let Some(cov) = cover_side(&l, &[from, to]) {
        let (x, y) = (
            cov.module_from_label(from, l.aliases())?,
            cov.module_from_label(to, l.aliases())?,
        );
        let d = cov.hom(&x, &y)?.1.len();
        let shifts = cov.twisted_hom_dims(&x, &y)?;
        let sum: usize = shifts.iter().map(|p| p.1).sum();
        let text = format!("dim = {d}\ntwisted sum = {sum}\n");
        return emit(
            g,
            text,
            json!({ "dim": d, "twisted_sum": sum, "shifts": shifts }),
        );
    }
    let (x, y) = (
        base_module(&l.algebra, from, l.aliases())?,
        base_module(&l.algebra, to, l.aliases())?,
    );
    let d = hom_dim(&x, &y)?;
    emit(g, format!("dim = {d}\n"), json!({ "dim": d }))
}

pub fn pushdown(g: &Global, path: &str, module: &str) -> Result<(), Failure> {
    let l = open(g, path)?;
    let cov = need_cover(&l)?;
    let m = cov.push_down(&cov.module_from_label(module, l.aliases())?);
    let text = format!("dims = {}\n{}", dims(&m), m.to_text());
    emit(
        g,
        text,
        json!({ "dims": m.dims, "vertices": cov.vq.base.vertices, "module": m.to_text() }),
    )
}

pub fn eval(g: &Global, a: &EvalArgs) -> Result<(), Failure> {
    let l = open(g, &a.file)?;
    let mut labels = functor_modules(&a.functor);
    labels.push(&a.at);
    let d = match cover_side(&l, &labels) {
        Some(cov) => {
            let t = cover_functor(cov, &a.functor, l.aliases())?;
            t.evaluate(cov, &cov.module_from_label(&a.at, l.aliases())?)?
        }
        None => base_functor_of(g, &l, &a.functor)?.eval_dim(&base_module(
            &l.algebra,
            &a.at,
            l.aliases(),
        )?)?,
    };
    emit(g, format!("{d}\n"), json!({ "dim": d }))
}

pub fn fun_hom(g: &Global, path: &str, left: &str, right: &str) -> Result<(), Failure> {
    let l = open(g, path)?;
    let mut labels = functor_modules(left);
    labels.extend(functor_modules(right));
    let d = match cover_side(&l, &labels) {
        Some(cov) => fp_hom_cover(
            cov,
            &cover_functor(cov, left, l.aliases())?,
            &cover_functor(cov, right, l.aliases())?,
        )?,
        None => {
            fp_hom(
                &base_functor_of(g, &l, left)?,
                &base_functor_of(g, &l, right)?,
            )?
            .0
        }
    };
    emit(g, format!("dim = {d}\n"), json!({ "dim": d }))
}

pub fn simple(g: &Global, a: &SimpleArgs) -> Result<(), Failure> {
    let l = open(g, &a.file)?;
    if let Some(cov) = cover_side(&l, &[&a.module]) {
        let n = cov.module_from_label(&a.module, l.aliases())?;
        let s = simple_functor_cover(cov, &n)?;
        let len = functor_length_cover(
            cov,
            &s,
            g.window.unwrap_or(MAX_MARGIN),
            g.dim_cap,
            g.count_cap,
        )?;
        let (src, tgt) = (cov.label(&s.source), cov.label(&s.target));
        let text = format!(
            "presentation: {src} -> {tgt}\nlength = {}\n{}",
            len.length,
            profile_table(&len.profile)
        );
        return emit(
            g,
            text,
            json!({ "source": src, "target": tgt, "length": len.length, "profile": len.profile }),
        );
    }
    let n = base_module(&l.algebra, &a.module, l.aliases())?;
    let list = base_list(g, &l)?;
    let s = simple_functor(&l.algebra, &n, &list)?;
    let rows = base_profile(&list, &s)?;
    let text = format!(
        "presentation: {} -> {}\n{}",
        dims(&s.source),
        dims(&s.target),
        profile_table(&rows)
    );
    emit(
        g,
        text,
        json!({ "source": s.source.dims, "target": s.target.dims, "profile": rows }),
    )
}

pub fn phi(g: &Global, a: &FunctorArgs) -> Result<(), Failure> {
    let l = open(g, &a.file)?;
    let cov = need_cover(&l)?;
    let t = cover_functor(cov, &a.functor, l.aliases())?;
    let u = t.phi(cov);
    let list = base_list(g, &l)?;
    let len = u.length(&list, true)?;
    let rows = base_profile(&list, &u)?;
    let text = format!(
        "presentation: {} -> {}\nlength = {}\n{}",
        dims(&u.source),
        dims(&u.target),
        len.length,
        profile_table(&rows)
    );
    emit(
        g,
        text,
        json!({ "source": u.source.dims, "target": u.target.dims, "length": len.length, "profile": rows }),
    )
}

pub fn length(g: &Global, a: &FunctorArgs) -> Result<(), Failure> {
    let l = open(g, &a.file)?;
    let (n, rows) = match cover_side(&l, &functor_modules(&a.functor)) {
        Some(cov) => {
            let t = cover_functor(cov, &a.functor, l.aliases())?;
            let len = functor_length_cover(
                cov,
                &t,
                g.window.unwrap_or(MAX_MARGIN),
                g.dim_cap,
                g.count_cap,
            )?;
            (len.length, len.profile)
        }
        None => {
            let t = base_functor_of(g, &l, &a.functor)?;
            let list = base_list(g, &l)?;
            (t.length(&list, true)?.length, base_profile(&list, &t)?)
        }
    };
    emit(
        g,
        format!("length = {n}\n{}", profile_table(&rows)),
        json!({ "length": n, "profile": rows }),
    )
}

pub fn kg0(g: &Global, inputs: &[Input]) -> Result<(), Failure> {
    let mut text = String::new();
    let mut out = Vec::new();
    for i in inputs {
        let l = load(&i.text, &g.options())?;
        let (verdict, _) = kg_level0_base(&l.algebra, &i.tag(), g.dim_cap, g.count_cap)?;
        text.push_str(&format!("{}: {verdict}\n", i.tag()));
        out.push(json!({ "fixture": i.path, "verdict": verdict }));
    }
    emit(g, text, Value::Array(out))
}

pub fn rep_build(g: &Global, path: &str, n: usize) -> Result<(), Failure> {
    let l = open(g, path)?;
    let cat = repetitive_truncation(&l.algebra, n);
    let q = cat.to_bound_quiver()?.to_text();
    emit(g, q.clone(), json!({ "dim": cat.total_dim(), "quiver": q }))
}

pub fn rep_orbit(g: &Global, path: &str, k: usize) -> Result<(), Failure> {
    let l = open(g, path)?;
    let q = selfinjective_orbit(&l.algebra, k)?;
    let alg = fovea::modcat::Algebra::new(&q)?.with_seed(g.seed);
    let (si, _) = selfinjectivity(&alg)?;
    let text = q.to_text();
    emit(
        g,
        text.clone(),
        json!({ "dim": alg.dim(), "selfinjective": si, "quiver": text }),
    )
}

pub fn rep_voltage(g: &Global, path: &str) -> Result<(), Failure> {
    let l = open(g, path)?;
    let text = repetitive_voltage(&l.algebra)?.to_text();
    emit(g, text.clone(), json!({ "quiver": text }))
}
