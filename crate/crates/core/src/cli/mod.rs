//! Command-line front end: instance files in, generator lists, traces and
//! pivot diagrams out.

pub mod diagram;
pub mod expr;
pub mod instance;

use std::fs;
use std::io;
use std::path::Path;

use crate::echelon::saturate_free;
use crate::error::{Error, Result};
use crate::field::{PrimeField, Rationals};
use crate::oracle::{verify_free, verify_syzygy, verify_vx, Verdict};
use crate::polyvec::{family_degree, piv, PivotIndex, PolyVec};
use crate::syzygy::syzygy_vx;
use crate::valuation::{BaseField, DomainSpec, RationalFunctionsAtZero, ValuationDomain, Zp};
use crate::vxsat::{saturate_vx, IterationRecord, SaturationResult, DEFAULT_MAX_ITER};

pub use diagram::pivot_diagram;
pub use instance::{render_document, Instance, Task};

/// Command-line settings; each one overrides the instance header.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Options {
    pub task: Option<Task>,
    pub domain: Option<DomainSpec>,
    pub verify: bool,
    pub degree_bound: Option<usize>,
    pub max_iter: Option<usize>,
    pub diagram: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    /// Result vectors in instance syntax.
    pub document: String,
    pub trace: Option<String>,
    pub kernel: Option<String>,
    pub diagram: Option<String>,
    pub verdict: Option<Verdict>,
}

impl Report {
    /// 0 on success, 2 when the oracle disagrees.
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Some(v) if !v.agree() => 2,
            _ => 0,
        }
    }

    /// The result document followed by the other artifacts as comment blocks.
    pub fn stdout_text(&self) -> String {
        let mut out = self.document.clone();
        let mut block = |title: &str, body: &str| {
            out.push_str(&format!("#\n# {title}\n"));
            for line in body.lines() {
                if line.is_empty() {
                    out.push_str("#\n");
                } else {
                    out.push_str(&format!("# {line}\n"));
                }
            }
        };
        if let Some(t) = &self.trace {
            block("trace.csv", t);
        }
        if let Some(k) = &self.kernel {
            block("kernel.txt", k);
        }
        if let Some(d) = &self.diagram {
            block("diagram.txt", d);
        }
        if let Some(v) = &self.verdict {
            out.push_str(&format!("#\n# verify: {v}\n"));
        }
        out
    }

    /// Writes `result.txt` and whichever of `trace.csv`, `kernel.txt`,
    /// `diagram.txt`, `verify.txt` apply.
    pub fn write_dir(&self, dir: &Path) -> io::Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("result.txt"), &self.document)?;
        if let Some(t) = &self.trace {
            fs::write(dir.join("trace.csv"), t)?;
        }
        if let Some(k) = &self.kernel {
            fs::write(dir.join("kernel.txt"), k)?;
        }
        if let Some(d) = &self.diagram {
            fs::write(dir.join("diagram.txt"), d)?;
        }
        if let Some(v) = &self.verdict {
            fs::write(dir.join("verify.txt"), format!("{v}\n"))?;
        }
        Ok(())
    }
}

/// Runs the instance described by `text`.
pub fn run(text: &str, opts: &Options) -> Result<Report> {
    let inst = Instance::parse(text)?;
    let domain = opts
        .domain
        .or(inst.domain)
        .ok_or_else(|| Error::InvalidDomain("no domain given".into()))?;
    domain.validate()?;
    match domain {
        DomainSpec::Zp { p } => run_in(&Zp::new(p)?, domain, &inst, opts),
        DomainSpec::RationalFunctionAtZero { base: BaseField::Rationals } => {
            run_in(&RationalFunctionsAtZero::new(Rationals), domain, &inst, opts)
        }
        DomainSpec::RationalFunctionAtZero { base: BaseField::Prime(p) } => {
            run_in(&RationalFunctionsAtZero::new(PrimeField::new(p)?), domain, &inst, opts)
        }
        DomainSpec::TrivialField { base: BaseField::Rationals } => run_in(&Rationals, domain, &inst, opts),
        DomainSpec::TrivialField { base: BaseField::Prime(p) } => run_in(&PrimeField::new(p)?, domain, &inst, opts),
    }
}

fn run_in<D: ValuationDomain>(d: &D, domain: DomainSpec, inst: &Instance, opts: &Options) -> Result<Report> {
    let task = opts
        .task
        .or(inst.task)
        .ok_or_else(|| Error::Parse {
            line: 0,
            column: 0,
            message: "no task given".into(),
        })?;
    let verify = opts.verify || inst.verify;
    let degree_bound = opts.degree_bound.or(inst.degree_bound);
    let max_iter = opts.max_iter.or(inst.max_iter).unwrap_or(DEFAULT_MAX_ITER);

    let vectors = inst.vectors_over(d)?;
    if vectors.is_empty() {
        return Err(Error::EmptyInput);
    }
    for v in &vectors {
        if !v.in_domain(d) {
            return Err(Error::NotInDomain(v.render(d)));
        }
    }

    match task {
        Task::SaturateFree => {
            let basis = saturate_free(d, &vectors)?;
            let cols = basis.columns();
            let diagram = opts.diagram.then(|| {
                let pivots: Vec<PivotIndex> = basis.pivots().collect();
                let max_exp = family_degree(&vectors).unwrap_or(0);
                pivot_diagram(&[], &pivots, vectors[0].len(), max_exp)
            });
            let verdict = verify
                .then(|| verify_free(d, &vectors, cols, degree_bound))
                .transpose()?;
            Ok(Report {
                document: render_document(d, domain, task, "strict echelon basis of the saturation", cols),
                trace: None,
                kernel: None,
                diagram,
                verdict,
            })
        }
        Task::SaturateVx => {
            let res = saturate_vx(d, &vectors, max_iter)?;
            let verdict = verify
                .then(|| verify_vx(d, &vectors, &res, degree_bound))
                .transpose()?;
            Ok(Report {
                document: render_document(d, domain, task, "V[X]-generators of the saturation", &res.generators),
                trace: Some(trace_csv(&res.trace)),
                kernel: None,
                diagram: opts.diagram.then(|| diagrams(d, &res, vectors[0].len())),
                verdict,
            })
        }
        Task::Syzygy => {
            let res = syzygy_vx(d, &vectors, max_iter)?;
            let verdict = verify
                .then(|| verify_syzygy(d, &vectors, res.generators(), degree_bound))
                .transpose()?;
            let kernel = render_document(d, domain, task, "K[X]-syzygies rescaled into V[X]^n", &res.kernel);
            Ok(Report {
                document: render_document(d, domain, task, "V[X]-generators of the syzygy module", res.generators()),
                trace: Some(trace_csv(&res.saturation.trace)),
                kernel: Some(kernel),
                diagram: (opts.diagram && !res.kernel.is_empty())
                    .then(|| diagrams(d, &res.saturation, vectors.len())),
                verdict,
            })
        }
    }
}

/// One CSV row per iteration.
pub fn trace_csv(trace: &[IterationRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "k",
        "N_k",
        "r_k",
        "n_k",
        "u_k",
        "delta_k",
        "Delta_k",
        "collisions",
        "collisions_initial",
    ])
    .expect("in-memory write");
    for r in trace {
        w.write_record([
            r.k.to_string(),
            r.new_columns.to_string(),
            r.rank.to_string(),
            r.indexes.to_string(),
            r.available.to_string(),
            r.defect.to_string(),
            r.slack.to_string(),
            r.collisions.to_string(),
            r.collisions_initial.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
}

fn pivots_of<D: ValuationDomain>(d: &D, cols: &[PolyVec<D::Elem>]) -> Vec<PivotIndex> {
    cols.iter()
        .map(|c| piv(d, c).expect("basis columns are primitive").0)
        .collect()
}

/// Diagrams of every step `(G_k, H_k)` of a run.
pub fn diagrams<D: ValuationDomain>(d: &D, res: &SaturationResult<D::Elem>, n: usize) -> String {
    let max_exp = res.degree + res.final_k();
    let mut out = String::new();
    for rec in &res.trace {
        let g = pivots_of(d, res.g_basis(rec.k).columns());
        let h = pivots_of(d, res.h_columns(rec.k));
        out.push_str(&format!("k={} delta={}\n", rec.k, rec.defect));
        out.push_str(&pivot_diagram(&g, &h, n, max_exp));
        out.push('\n');
    }
    out
}
