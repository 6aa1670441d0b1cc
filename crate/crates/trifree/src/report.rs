//! Serializable reports and their JSON, CSV and text renderings.

use std::io::Write;

use serde::Serialize;
use trifree_core::bounds::ClaimReport;
use trifree_core::envelope::{Endpoint, EnvelopeReport};
use trifree_core::montecarlo::Estimate;
use trifree_core::rational::{to_f64, ParsedProbability};
use trifree_core::search::SearchReport;

use crate::error::Result;
use crate::formats::{write_class_csv, ClassRow, PolyJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

/// A report that can be written in every output format.
pub trait Render: Serialize {
    fn text(&self) -> String;

    fn csv(&self, w: &mut dyn Write) -> Result<()>;

    fn write(&self, format: OutputFormat, w: &mut dyn Write) -> Result<()> {
        match format {
            OutputFormat::Json => {
                serde_json::to_writer_pretty(&mut *w, self)?;
                writeln!(w)?;
            }
            OutputFormat::Csv => self.csv(w)?,
            OutputFormat::Text => write!(w, "{}", self.text())?,
        }
        Ok(())
    }
}

fn csv_rows<T: Serialize>(w: &mut dyn Write, rows: impl IntoIterator<Item = T>) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in rows {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbabilityDto {
    /// Exact value, `num/den`.
    pub value: String,
    pub approx: f64,
    /// The input was a decimal literal, read as `digits / 10^d`.
    pub from_decimal: bool,
}

impl From<&ParsedProbability> for ProbabilityDto {
    fn from(p: &ParsedProbability) -> Self {
        ProbabilityDto { value: p.value.to_string(), approx: to_f64(&p.value), from_decimal: p.from_decimal }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimDto {
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
    pub relation: &'static str,
    pub witness: Option<String>,
    pub pass: bool,
}

impl From<&ClaimReport> for ClaimDto {
    fn from(c: &ClaimReport) -> Self {
        ClaimDto {
            claim: c.claim.clone(),
            lhs: c.lhs.clone(),
            rhs: c.rhs.clone(),
            relation: c.relation.symbol(),
            witness: c.witness.clone(),
            pass: c.pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub claims: Vec<ClaimDto>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(claims: &[ClaimReport]) -> Self {
        VerifyReport { claims: claims.iter().map(ClaimDto::from).collect(), pass: claims.iter().all(|c| c.pass) }
    }
}

impl Render for VerifyReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let status = if c.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {}: {} {} {}\n", c.claim, c.lhs, c.relation, c.rhs));
            if let Some(w) = &c.witness {
                out.push_str(&format!("      {w}\n"));
            }
        }
        let failed = self.claims.iter().filter(|c| !c.pass).count();
        out.push_str(&format!("{} claims, {failed} failed\n", self.claims.len()));
        out
    }

    fn csv(&self, w: &mut dyn Write) -> Result<()> {
        csv_rows(w, &self.claims)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhiReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub triangles: usize,
    pub clique_order: usize,
    pub profile: Vec<String>,
    pub polynomial: PolyJson,
    pub polynomial_text: String,
    pub p: Option<ProbabilityDto>,
    pub value: Option<String>,
    pub value_approx: Option<f64>,
    pub checks: Vec<ClaimDto>,
}

impl Render for PhiReport {
    fn text(&self) -> String {
        let mut out = format!(
            "graph {} (n={}, m={}, triangles={})\nprofile (k={}): {}\nPhi = {}\n",
            self.graph6,
            self.n,
            self.m,
            self.triangles,
            self.clique_order,
            self.profile.join(" "),
            self.polynomial_text
        );
        if let (Some(p), Some(v), Some(a)) = (&self.p, &self.value, self.value_approx) {
            let note = if p.from_decimal { " (decimal input read exactly)" } else { "" };
            out.push_str(&format!("Phi at p={}{note}: {v} ~ {a:.12}\n", p.value));
        }
        out
    }

    fn csv(&self, w: &mut dyn Write) -> Result<()> {
        let row = ClassRow { graph6: self.graph6.clone(), triangles: self.triangles, coeffs: self.polynomial.coeffs.join(" ") };
        write_class_csv(w, &[row])
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchDto {
    pub n: usize,
    pub i: usize,
    pub m: usize,
    pub p: ProbabilityDto,
    pub maximizers: Vec<String>,
    pub max_value: String,
    pub max_value_approx: f64,
    pub enumerated: usize,
    pub pruned: usize,
    pub runtime_ms: Option<u64>,
}

impl SearchDto {
    pub fn new(r: &SearchReport, m: usize, p: &ParsedProbability) -> Self {
        SearchDto {
            n: r.n,
            i: r.i,
            m,
            p: p.into(),
            maximizers: r.maximizers.clone(),
            max_value: r.max_value.to_string(),
            max_value_approx: to_f64(&r.max_value),
            enumerated: r.enumerated,
            pruned: r.pruned,
            runtime_ms: r.runtime_ms,
        }
    }
}

impl Render for SearchDto {
    fn text(&self) -> String {
        let mut out = format!(
            "n={} i={} m={} p={}: max Phi = {} ~ {:.12}\n{} classes, {} pruned\n",
            self.n, self.i, self.m, self.p.value, self.max_value, self.max_value_approx, self.enumerated, self.pruned
        );
        for g in &self.maximizers {
            out.push_str(&format!("maximizer {g}\n"));
        }
        if let Some(ms) = self.runtime_ms {
            out.push_str(&format!("runtime {ms} ms\n"));
        }
        out
    }

    fn csv(&self, w: &mut dyn Write) -> Result<()> {
        #[derive(Serialize)]
        struct Row<'a> {
            graph6: &'a str,
            value: &'a str,
        }
        csv_rows(w, self.maximizers.iter().map(|g| Row { graph6: g, value: &self.max_value }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EndpointDto {
    Exact(String),
    Crossover(usize),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SegmentDto {
    pub start: EndpointDto,
    pub end: EndpointDto,
    pub maximizers: Vec<String>,
    pub polynomial: PolyJson,
    pub polynomial_text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossoverDto {
    pub lo: String,
    pub hi: String,
    pub approx: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnvelopeDto {
    pub n: usize,
    pub i: usize,
    pub classes: usize,
    pub distinct_polynomials: usize,
    pub candidates: usize,
    pub segments: Vec<SegmentDto>,
    pub crossovers: Vec<CrossoverDto>,
}

fn endpoint(e: &Endpoint) -> EndpointDto {
    match e {
        Endpoint::Exact(x) => EndpointDto::Exact(x.to_string()),
        Endpoint::Crossover(k) => EndpointDto::Crossover(*k),
    }
}

impl From<&EnvelopeReport> for EnvelopeDto {
    fn from(r: &EnvelopeReport) -> Self {
        EnvelopeDto {
            n: r.n,
            i: r.i,
            classes: r.classes,
            distinct_polynomials: r.distinct_polynomials,
            candidates: r.candidates,
            segments: r
                .segments
                .iter()
                .map(|s| SegmentDto {
                    start: endpoint(&s.start),
                    end: endpoint(&s.end),
                    maximizers: s.maximizers.clone(),
                    polynomial: PolyJson::from(&s.polynomial),
                    polynomial_text: s.polynomial.to_text(),
                })
                .collect(),
            crossovers: r
                .crossovers
                .iter()
                .map(|c| CrossoverDto { lo: c.interval.lo.to_string(), hi: c.interval.hi.to_string(), approx: c.approx })
                .collect(),
        }
    }
}

impl EnvelopeDto {
    fn endpoint_text(&self, e: &EndpointDto) -> String {
        match e {
            EndpointDto::Exact(x) => x.clone(),
            EndpointDto::Crossover(k) => format!("{:.12}", self.crossovers[*k].approx),
        }
    }
}

impl Render for EnvelopeDto {
    fn text(&self) -> String {
        let mut out = format!(
            "n={} i={}: {} classes, {} distinct polynomials, {} candidates\n",
            self.n, self.i, self.classes, self.distinct_polynomials, self.candidates
        );
        for s in &self.segments {
            out.push_str(&format!(
                "({}, {}): {}\n  Phi = {}\n",
                self.endpoint_text(&s.start),
                self.endpoint_text(&s.end),
                s.maximizers.join(" "),
                s.polynomial_text
            ));
        }
        for (k, c) in self.crossovers.iter().enumerate() {
            out.push_str(&format!("crossover {k}: {:.15} in [{}, {}]\n", c.approx, c.lo, c.hi));
        }
        out
    }

    fn csv(&self, w: &mut dyn Write) -> Result<()> {
        #[derive(Serialize)]
        struct Row {
            start: String,
            end: String,
            maximizers: String,
            coeffs: String,
        }
        csv_rows(
            w,
            self.segments.iter().map(|s| Row {
                start: self.endpoint_text(&s.start),
                end: self.endpoint_text(&s.end),
                maximizers: s.maximizers.join(" "),
                coeffs: s.polynomial.coeffs.join(" "),
            }),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EstimateDto {
    pub mean: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub samples: u64,
    pub seed: u64,
    pub p: String,
    pub p_from_decimal: bool,
}

impl EstimateDto {
    pub fn new(e: &Estimate, p: &ParsedProbability) -> Self {
        EstimateDto {
            mean: e.mean,
            ci_low: e.ci_low,
            ci_high: e.ci_high,
            samples: e.samples,
            seed: e.seed,
            p: e.p.to_string(),
            p_from_decimal: p.from_decimal,
        }
    }
}

impl Render for EstimateDto {
    fn text(&self) -> String {
        format!(
            "mean {:.6}, 95% CI [{:.6}, {:.6}] from {} samples (seed {}, p={})\n",
            self.mean, self.ci_low, self.ci_high, self.samples, self.seed, self.p
        )
    }

    fn csv(&self, w: &mut dyn Write) -> Result<()> {
        csv_rows(w, [self])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassesDto {
    pub n: usize,
    pub m: usize,
    pub classes: Vec<ClassRow>,
}

impl Render for ClassesDto {
    fn text(&self) -> String {
        let mut out = format!("n={} m={}: {} classes\n", self.n, self.m, self.classes.len());
        for r in &self.classes {
            out.push_str(&format!("{} t={} [{}]\n", r.graph6, r.triangles, r.coeffs));
        }
        out
    }

    fn csv(&self, w: &mut dyn Write) -> Result<()> {
        write_class_csv(w, &self.classes)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypergraphReport {
    pub vertices: usize,
    pub hyperedges: usize,
    pub linear: bool,
    pub flower: bool,
    pub profile: Vec<String>,
    pub p: Option<ProbabilityDto>,
    /// Exact probability that a `p`-random vertex set is independent.
    pub probability: Option<String>,
    /// `1 - p + p(1-p²)^r`, meaningful for linear 3-uniform input.
    pub bound: Option<String>,
}

impl Render for HypergraphReport {
    fn text(&self) -> String {
        let mut out = format!(
            "{} vertices, {} hyperedges, linear={}, flower={}\nprofile: {}\n",
            self.vertices,
            self.hyperedges,
            self.linear,
            self.flower,
            self.profile.join(" ")
        );
        if let (Some(p), Some(v), Some(b)) = (&self.p, &self.probability, &self.bound) {
            out.push_str(&format!("P(independent) at p={}: {v}\nbound 1 - p + p(1-p^2)^r: {b}\n", p.value));
        }
        out
    }

    fn csv(&self, w: &mut dyn Write) -> Result<()> {
        #[derive(Serialize)]
        struct Row<'a> {
            vertices: usize,
            hyperedges: usize,
            linear: bool,
            probability: Option<&'a str>,
            bound: Option<&'a str>,
        }
        csv_rows(
            w,
            [Row {
                vertices: self.vertices,
                hyperedges: self.hyperedges,
                linear: self.linear,
                probability: self.probability.as_deref(),
                bound: self.bound.as_deref(),
            }],
        )
    }
}
