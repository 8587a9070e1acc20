//! Named verification suites over fixture files, producing [`Report`]s.

use std::path::Path;
use std::str::FromStr;

use crate::covering::{
    verify_covering_axioms, verify_pushdown, verify_pushdown_exhaustion, Covering, LayeredModule,
    DEFAULT_MAX_RADIUS, DEFAULT_SEARCH_RADIUS, DEFAULT_START_RADIUS,
};
use crate::error::{FoveaError, Result};
use crate::exactla::Field;
use crate::functcat::{
    complete_list, epi_certificate, kg_level0_base, kg_level0_pair, phi_epi_cover,
    phi_hom_identity, psi_evaluate, twisted_eval_sum, Caps, LayeredFunctor,
};
use crate::labels::cover_functor;
use crate::modcat::{is_indecomposable, Algebra, DEFAULT_COUNT_CAP, DEFAULT_DIM_CAP, DEFAULT_SEED};
use crate::par::Exec;
use crate::quiver::{parse_quiver_file, QuiverFile, VoltageQuiver};
use crate::repetitive::repetitive_checks;
use crate::report::{Check, Fixture, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    CoverAxioms,
    Pushdown,
    PhiIdentities,
    Kg0,
    Repetitive,
}

pub const SUITE_NAMES: [&str; 5] = [
    "cover-axioms",
    "pushdown",
    "phi-identities",
    "kg0",
    "repetitive",
];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::CoverAxioms => SUITE_NAMES[0],
            Suite::Pushdown => SUITE_NAMES[1],
            Suite::PhiIdentities => SUITE_NAMES[2],
            Suite::Kg0 => SUITE_NAMES[3],
            Suite::Repetitive => SUITE_NAMES[4],
        }
    }
}

impl FromStr for Suite {
    type Err = FoveaError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cover-axioms" => Ok(Suite::CoverAxioms),
            "pushdown" => Ok(Suite::Pushdown),
            "phi-identities" => Ok(Suite::PhiIdentities),
            "kg0" => Ok(Suite::Kg0),
            "repetitive" => Ok(Suite::Repetitive),
            _ => Err(FoveaError::Invalid(format!(
                "unknown suite `{s}`; expected one of {}",
                SUITE_NAMES.join(", ")
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Overrides the field named in the fixture.
    pub field: Option<Field>,
    pub seed: u64,
    /// Radius of the covering window; each suite has its own default.
    pub window: Option<i64>,
    pub dim_cap: usize,
    pub count_cap: usize,
    pub exec: Exec,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            field: None,
            seed: DEFAULT_SEED,
            window: None,
            dim_cap: DEFAULT_DIM_CAP,
            count_cap: DEFAULT_COUNT_CAP,
            exec: Exec::default(),
        }
    }
}

/// A fixture: its path as given and its contents.
#[derive(Clone, Debug)]
pub struct Input {
    pub path: String,
    pub text: String,
}

impl Input {
    pub fn read(path: &str) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| FoveaError::Invalid(format!("cannot read {path}: {e}")))?;
        Ok(Input {
            path: path.into(),
            text,
        })
    }

    /// File stem, used to prefix check ids.
    pub fn tag(&self) -> String {
        Path::new(&self.path)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| self.path.clone())
    }
}

/// A parsed fixture with the option overrides applied.
pub struct Loaded {
    pub file: QuiverFile,
    pub algebra: Algebra,
    /// Present when the fixture carries arrow degrees.
    pub covering: Option<Covering>,
}

impl Loaded {
    pub fn field(&self) -> Field {
        self.file.quiver.field
    }

    pub fn aliases(&self) -> &[(String, String)] {
        &self.file.aliases
    }

    /// The covering with every arrow in degree zero.
    pub fn trivial_covering(&self, opts: &Options) -> Result<Covering> {
        let vq = VoltageQuiver::new(
            self.file.quiver.clone(),
            vec![0; self.file.quiver.arrows.len()],
        )?;
        Ok(Covering::new(vq)?.with_seed(opts.seed).with_exec(opts.exec))
    }
}

pub fn load(text: &str, opts: &Options) -> Result<Loaded> {
    let mut file = parse_quiver_file(text)?;
    if let Some(f) = opts.field {
        file.quiver = file.quiver.with_field(f)?;
    }
    let algebra = Algebra::new(&file.quiver)?
        .with_seed(opts.seed)
        .with_exec(opts.exec);
    let covering = match &file.degrees {
        Some(d) => Some(
            Covering::new(VoltageQuiver::new(file.quiver.clone(), d.clone())?)?
                .with_seed(opts.seed)
                .with_exec(opts.exec),
        ),
        None => None,
    };
    Ok(Loaded {
        file,
        algebra,
        covering,
    })
}

fn need_cover<'a>(l: &'a Loaded, input: &Input) -> Result<&'a Covering> {
    l.covering
        .as_ref()
        .ok_or_else(|| FoveaError::Invalid(format!("{} has no arrow degrees", input.path)))
}

fn prefixed(tag: &str, cs: Vec<Check>) -> Vec<Check> {
    cs.into_iter()
        .map(|mut c| {
            c.id = format!("{tag}/{}", c.id);
            c
        })
        .collect()
}

/// The `module` aliases of a covering fixture, or `S<v>@0` and `P<v>@0`
/// for each vertex when there are none.
pub fn cover_modules(
    cov: &Covering,
    aliases: &[(String, String)],
) -> Result<Vec<(String, LayeredModule)>> {
    if aliases.is_empty() {
        let mut out = Vec::new();
        for v in &cov.vq.base.vertices {
            for k in ["S", "P"] {
                let l = format!("{k}{v}@0");
                out.push((l.clone(), cov.module_from_label(&l, &[])?));
            }
        }
        return Ok(out);
    }
    aliases
        .iter()
        .map(|(n, _)| Ok((n.clone(), cov.module_from_label(n, aliases)?)))
        .collect()
}

/// Representable and simple functors at each named module, plus cokernels
/// between consecutive names with a nonzero hom.
pub fn cover_battery(
    cov: &Covering,
    aliases: &[(String, String)],
) -> Result<Vec<(String, LayeredFunctor)>> {
    let mods = cover_modules(cov, aliases)?;
    let mut labels = Vec::new();
    for (n, m) in &mods {
        labels.push(format!("H@{n}"));
        if is_indecomposable(&m.module, cov.seed())? {
            labels.push(format!("S@{n}"));
        }
    }
    for pair in mods.windows(2) {
        let ((a, x), (b, y)) = (&pair[0], &pair[1]);
        if !cov.hom(x, y)?.1.is_empty() {
            labels.push(format!("C@{a}>{b}"));
        }
    }
    labels
        .into_iter()
        .map(|l| Ok((l.clone(), cover_functor(cov, &l, aliases)?)))
        .collect()
}

const TWISTS: [i64; 4] = [-2, -1, 1, 2];

fn cover_axioms(l: &Loaded, _input: &Input, opts: &Options) -> Result<Vec<Check>> {
    let trivial;
    let cov = match &l.covering {
        Some(c) => c,
        None => {
            trivial = l.trivial_covering(opts)?;
            &trivial
        }
    };
    let start = opts.window.unwrap_or(DEFAULT_START_RADIUS);
    verify_covering_axioms(cov, start, DEFAULT_MAX_RADIUS.max(start * 4))
}

fn pushdown(l: &Loaded, input: &Input, opts: &Options) -> Result<Vec<Check>> {
    let cov = need_cover(l, input)?;
    let mods = cover_modules(cov, l.aliases())?;
    let mut out = Vec::new();
    for (a, x) in &mods {
        for (b, y) in &mods {
            out.extend(verify_pushdown(
                cov,
                &format!("pushdown/{a}/{b}"),
                x,
                y,
                &TWISTS,
                DEFAULT_SEARCH_RADIUS,
            )?);
        }
    }
    let r = opts.window.unwrap_or(2 * cov.reach().max(1));
    out.extend(verify_pushdown_exhaustion(
        cov,
        "pushdown/classes",
        r,
        opts.dim_cap,
        opts.count_cap,
    )?);
    Ok(out)
}

fn phi_identities(l: &Loaded, input: &Input, opts: &Options) -> Result<Vec<Check>> {
    let cov = need_cover(l, input)?;
    let mods = cover_modules(cov, l.aliases())?;
    let battery = cover_battery(cov, l.aliases())?;
    let list = complete_list(&cov.base, opts.dim_cap, opts.count_cap)?
        .ok_or(FoveaError::IncompleteList)?;
    let mut out = Vec::new();
    for (tn, t) in &battery {
        let u = t.phi(cov);
        for (xn, x) in &mods {
            out.push(Check::new(
                format!("phi/eval/{tn}/{xn}"),
                "phi-evaluation-sum",
                twisted_eval_sum(cov, t, x)?,
                psi_evaluate(cov, &u, x)?,
            ));
        }
        for (sn, s) in &battery {
            out.push(phi_hom_identity(cov, &format!("phi/hom/{tn}/{sn}"), t, s)?);
        }
        let cover = phi_epi_cover(cov, &u, &t.source, &t.target)?;
        let (dominates, onto) = epi_certificate(&cover, &u, &list)?;
        out.push(Check::holds(
            format!("phi/epi/{tn}"),
            "phi-epi-cover",
            dominates && onto,
            "no epi witness",
        ));
    }
    Ok(out)
}

fn kg0(l: &Loaded, _input: &Input, opts: &Options) -> Result<Vec<Check>> {
    let (_, mut out) = kg_level0_base(&l.algebra, "kg0/base", opts.dim_cap, opts.count_cap)?;
    if let Some(cov) = &l.covering {
        let battery = cover_battery(cov, l.aliases())?;
        let caps = Caps {
            dim_cap: opts.dim_cap,
            count_cap: opts.count_cap,
            max_margin: opts.window.unwrap_or(16),
        };
        out.extend(prefixed(
            "cover",
            kg_level0_pair(cov, &battery, &TWISTS, caps)?.1,
        ));
    }
    Ok(out)
}

fn repetitive(l: &Loaded, _input: &Input, opts: &Options) -> Result<Vec<Check>> {
    let n = opts.window.map(|w| w.max(1) as usize).unwrap_or(1);
    repetitive_checks(&l.algebra, "rep", n)
}

/// Runs a suite over the given fixtures. Check ids are prefixed by the
/// fixture's file stem; the report's field is the override or else the
/// first fixture's.
pub fn run_suite(suite: Suite, inputs: &[Input], opts: &Options) -> Result<Report> {
    if inputs.is_empty() {
        return Err(FoveaError::Invalid(
            "suite needs at least one fixture".into(),
        ));
    }
    let loaded = inputs
        .iter()
        .map(|i| load(&i.text, opts))
        .collect::<Result<Vec<_>>>()?;
    let field = opts.field.unwrap_or_else(|| loaded[0].field());
    let mut report = Report::new(suite.name(), &field.label(), opts.seed);
    for (input, l) in inputs.iter().zip(&loaded) {
        report.fixtures.push(Fixture::new(&input.path, &input.text));
        let checks = match suite {
            Suite::CoverAxioms => cover_axioms(l, input, opts)?,
            Suite::Pushdown => pushdown(l, input, opts)?,
            Suite::PhiIdentities => phi_identities(l, input, opts)?,
            Suite::Kg0 => kg0(l, input, opts)?,
            Suite::Repetitive => repetitive(l, input, opts)?,
        };
        report.extend(prefixed(&input.tag(), checks));
    }
    Ok(report.finish())
}
