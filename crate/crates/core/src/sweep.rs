//! Exhaustive (or seeded random) machine check of the gadget equivalences:
//! for each hypergraph, 2-colourability must match P5-contractibility of
//! the P5 gadget, C6-contractibility of the C6 gadget and P6-contractibility
//! of the P6 gadget.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::engine::{
    contracts_to, cyclicity, find_suitable_pair, verify_witness, Budget, EngineError, PatternSpec,
    WitnessStructure,
};
use crate::hypergraph::{Hypergraph, TwoColouring};
use crate::reductions::{build_gadget, p5_witness_to_colouring, GadgetKind, LabeledGadget};

pub const SCHEMA: &str = "sweep/1";
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    pub max_elements: usize,
    pub max_edges: usize,
    /// Draw this many random instances instead of enumerating all of them.
    pub samples: Option<usize>,
    pub seed: u64,
    /// Node budget for each individual search.
    pub budget: Budget,
    pub with_cyclicity: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            max_elements: 3,
            max_edges: 3,
            samples: None,
            seed: DEFAULT_SEED,
            budget: Budget::UNLIMITED,
            with_cyclicity: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    BudgetExceeded,
}

#[derive(Debug, Clone, Serialize)]
pub struct GadgetRecord {
    pub vertices: usize,
    pub edges: usize,
    pub verdict: Verdict,
    /// Set when a returned witness failed verification or colouring extraction.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceRecord {
    pub key: String,
    pub hypergraph: Hypergraph,
    pub colourable: bool,
    pub colouring: Option<TwoColouring>,
    pub p5: GadgetRecord,
    pub p6: GadgetRecord,
    pub c6: GadgetRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c6_cyclicity: Option<usize>,
    pub agreement: bool,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct SweepSummary {
    pub instances: usize,
    pub colourable: usize,
    pub agreements: usize,
    pub disagreements: usize,
    pub budget_exceeded: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub schema: &'static str,
    pub max_elements: usize,
    pub max_edges: usize,
    pub sampled: bool,
    pub seed: u64,
    pub summary: SweepSummary,
    pub instances: Vec<InstanceRecord>,
}

fn element_names(m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("q{i}")).collect()
}

fn subset(names: &[String], mask: usize) -> Vec<String> {
    (0..names.len())
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| names[i].clone())
        .collect()
}

fn instance_key(h: &Hypergraph) -> String {
    let edges: Vec<String> = h
        .hyperedges()
        .iter()
        .map(|e| {
            let names: Vec<&str> = e.iter().map(|&i| h.elements()[i].as_str()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    format!("m{}:{}", h.element_count(), edges.join("|"))
}

fn combinations(pool: usize, size: usize, out: &mut Vec<Vec<usize>>) {
    fn go(start: usize, pool: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..pool {
            cur.push(i);
            go(i + 1, pool, size, cur, out);
            cur.pop();
        }
    }
    go(0, pool, size, &mut Vec::new(), out);
}

/// All hypergraphs on `2..=max_elements` elements whose hyperedge list is a
/// set of at most `max_edges` distinct nonempty subsets. Returned raw
/// (not normalized).
pub fn exhaustive_instances(max_elements: usize, max_edges: usize) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for m in 2..=max_elements {
        let names = element_names(m);
        let masks: Vec<usize> = (1..1usize << m).collect();
        for size in 0..=max_edges.min(masks.len()) {
            let mut combos = Vec::new();
            combinations(masks.len(), size, &mut combos);
            for combo in combos {
                let edges: Vec<Vec<String>> =
                    combo.iter().map(|&c| subset(&names, masks[c])).collect();
                out.push(Hypergraph::new(names.clone(), edges).expect("valid by construction"));
            }
        }
    }
    out
}

/// Random instances drawn with a seeded generator.
pub fn sampled_instances(
    max_elements: usize,
    max_edges: usize,
    samples: usize,
    seed: u64,
) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let m = rng.gen_range(2..=max_elements.max(2));
            let names = element_names(m);
            let pool = (1usize << m) - 1;
            let size = rng.gen_range(0..=max_edges.min(pool));
            let edges: Vec<Vec<String>> = sample(&mut rng, pool, size)
                .into_iter()
                .map(|c| subset(&names, c + 1))
                .collect();
            Hypergraph::new(names, edges).expect("valid by construction")
        })
        .collect()
}

fn verdict<T>(r: &Result<Option<T>, EngineError>) -> Verdict {
    match r {
        Ok(Some(_)) => Verdict::Yes,
        Ok(None) => Verdict::No,
        Err(_) => Verdict::BudgetExceeded,
    }
}

fn check_gadget(
    gadget: &LabeledGadget,
    result: Result<Option<WitnessStructure>, EngineError>,
) -> GadgetRecord {
    let mut error = None;
    if let Err(e) = &result {
        if !matches!(e, EngineError::BudgetExceeded(_)) {
            error = Some(e.to_string());
        }
    }
    if let Ok(Some(ws)) = &result {
        if let Err(v) = verify_witness(&gadget.graph, ws) {
            error = Some(format!("witness rejected: {v}"));
        } else if gadget.kind == GadgetKind::P5 {
            if let Err(e) = p5_witness_to_colouring(gadget, ws) {
                error = Some(format!("colouring extraction failed: {e}"));
            }
        }
    }
    GadgetRecord {
        vertices: gadget.graph.order(),
        edges: gadget.graph.size(),
        verdict: verdict(&result),
        error,
    }
}

/// Run every decision procedure on the gadgets of one (raw) hypergraph.
pub fn evaluate_instance(raw: &Hypergraph, opts: &SweepOptions) -> InstanceRecord {
    let h = raw.normalize().expect("sweep instances have at least two elements");
    let colouring = h.two_colouring().expect("small instance");
    let colourable = colouring.is_some();
    let gadget = |kind| build_gadget(kind, &h).expect("normalized");
    let (p5, p6, c6) = (gadget(GadgetKind::P5), gadget(GadgetKind::P6), gadget(GadgetKind::C6));

    let p5_rec = check_gadget(
        &p5,
        find_suitable_pair(&p5.graph, 5, opts.budget).map(|r| r.map(|p| p.witness)),
    );
    let p6_rec = check_gadget(
        &p6,
        find_suitable_pair(&p6.graph, 6, opts.budget).map(|r| r.map(|p| p.witness)),
    );
    let c6_rec = check_gadget(&c6, contracts_to(&c6.graph, &PatternSpec::Cycle(6), opts.budget));
    let c6_cyclicity = if opts.with_cyclicity {
        cyclicity(&c6.graph, opts.budget).ok()
    } else {
        None
    };

    let expected = if colourable { Verdict::Yes } else { Verdict::No };
    let mut agreement = [&p5_rec, &p6_rec, &c6_rec]
        .iter()
        .all(|r| r.verdict == expected && r.error.is_none());
    if opts.with_cyclicity {
        agreement &= matches!(c6_cyclicity, Some(k) if k >= 3 && (k >= 6) == colourable);
    }
    InstanceRecord {
        key: instance_key(raw),
        hypergraph: h,
        colourable,
        colouring,
        p5: p5_rec,
        p6: p6_rec,
        c6: c6_rec,
        c6_cyclicity,
        agreement,
    }
}

pub fn run_sweep(opts: &SweepOptions) -> SweepReport {
    let raw = match opts.samples {
        Some(k) => sampled_instances(opts.max_elements, opts.max_edges, k, opts.seed),
        None => exhaustive_instances(opts.max_elements, opts.max_edges),
    };
    let mut instances: Vec<InstanceRecord> =
        raw.par_iter().map(|h| evaluate_instance(h, opts)).collect();
    instances.sort_by(|a, b| a.key.cmp(&b.key));
    let budget_hit = |r: &InstanceRecord| {
        [&r.p5, &r.p6, &r.c6]
            .iter()
            .any(|g| g.verdict == Verdict::BudgetExceeded)
            || (opts.with_cyclicity && r.c6_cyclicity.is_none())
    };
    let summary = SweepSummary {
        instances: instances.len(),
        colourable: instances.iter().filter(|r| r.colourable).count(),
        agreements: instances.iter().filter(|r| r.agreement).count(),
        disagreements: instances
            .iter()
            .filter(|r| !r.agreement && !budget_hit(r))
            .count(),
        budget_exceeded: instances.iter().filter(|r| budget_hit(r)).count(),
    };
    SweepReport {
        schema: SCHEMA,
        max_elements: opts.max_elements,
        max_edges: opts.max_edges,
        sampled: opts.samples.is_some(),
        seed: opts.seed,
        summary,
        instances,
    }
}
