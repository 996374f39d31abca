//! Test-algebra generation and the statement-indexed verification suites.
//!
//! The corpus covers every finite totally ordered algebra up to a size
//! bound (generated as ordinal sums of towers of finite MV-chains), a few
//! small direct products, and the three standard rational chains. Suites
//! are keyed S2..S10; a run is only globally green when every suite ran and
//! passed.

mod suites;
mod term;

pub use suites::{
    all_suite_ids, global_pass, product_no_sum_witness_cases, run_all_suites, run_suite,
    PropertyRecord, SuiteReport,
};
pub use term::{find_counterexample, Equation, Term, Witness};

use crate::algebra::{Algebra, Value};
use crate::chang::GroupElt;
use crate::error::{Error, Result};
use crate::goodseq::GoodSeq;
use rand::Rng;

/// Bounds and seed for corpus generation and sampled properties. The same
/// configuration always generates the same corpus and the same samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub max_chain_size: usize,
    pub max_tower_components: usize,
    pub product_arity: usize,
    pub samples: usize,
    pub denom_cap: u64,
    pub seed: u64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            max_chain_size: 5,
            max_tower_components: 4,
            product_arity: 3,
            samples: 1000,
            denom_cap: 64,
            seed: 0xb1a16,
        }
    }
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_chain_size < 2 {
            return Err(Error::Construction("max chain size must be at least 2".into()));
        }
        for (label, v) in [
            ("max tower components", self.max_tower_components),
            ("product arity", self.product_arity),
            ("samples", self.samples),
            ("denominator cap", self.denom_cap as usize),
        ] {
            if v < 1 {
                return Err(Error::Construction(format!("{label} must be at least 1")));
            }
        }
        Ok(())
    }
}

/// A named corpus member.
#[derive(Debug, Clone)]
pub struct TestAlgebra {
    pub name: String,
    pub alg: Algebra,
}

impl TestAlgebra {
    pub fn new(name: impl Into<String>, alg: Algebra) -> TestAlgebra {
        TestAlgebra {
            name: name.into(),
            alg,
        }
    }
}

/// All totally ordered algebras of size exactly `size`, as ordinal sums of
/// towers of finite MV-chains (component sizes at least 2; each component
/// after the first contributes its size minus one because the top is
/// shared). Duplicate-free in the construction data.
pub fn chains_of_size(size: usize, max_components: usize) -> Vec<TestAlgebra> {
    let mut out = Vec::new();
    if size < 2 {
        return out;
    }
    // shapes (k0; k1, ..., km): size = k0 + sum(ki - 1)
    let mut shapes: Vec<Vec<usize>> = Vec::new();
    for k0 in 2..=size {
        let rest = size - k0;
        for comp in compositions(rest) {
            let mut shape = vec![k0];
            shape.extend(comp.iter().map(|p| p + 1));
            if shape.len() <= max_components {
                shapes.push(shape);
            }
        }
    }
    shapes.sort();
    for shape in shapes {
        let comps: Vec<Algebra> = shape
            .iter()
            .map(|&k| Algebra::lukasiewicz_finite(k).expect("k >= 2"))
            .collect();
        let alg = Algebra::ordinal_sum(comps).expect("tower components are MV-chains");
        let name = if shape.len() == 1 {
            format!("L{}", shape[0])
        } else {
            let parts: Vec<String> = shape.iter().map(|k| k.to_string()).collect();
            format!("tower({})", parts.join(","))
        };
        out.push(TestAlgebra::new(name, alg));
    }
    out
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All generated chains with size between 2 and `n`.
pub fn gen_finite_bl_chains(n: usize, max_components: usize) -> Vec<TestAlgebra> {
    (2..=n)
        .flat_map(|s| chains_of_size(s, max_components))
        .collect()
}

/// The fixed small products used alongside the chains.
pub fn product_corpus(cfg: &GeneratorConfig) -> Vec<TestAlgebra> {
    let mut out = Vec::new();
    if cfg.product_arity < 2 {
        return out;
    }
    let l2 = Algebra::lukasiewicz_finite(2).expect("chain");
    let l3 = Algebra::lukasiewicz_finite(3).expect("chain");
    let g3 = Algebra::ordinal_sum(vec![l2.clone(), l2.clone()]).expect("tower");
    out.push(TestAlgebra::new(
        "prod(L2,L3)",
        Algebra::direct_product(vec![l2.clone(), l3.clone()]).expect("product"),
    ));
    out.push(TestAlgebra::new(
        "prod(G3,L2)",
        Algebra::direct_product(vec![g3, l2.clone()]).expect("product"),
    ));
    if cfg.product_arity >= 3 {
        out.push(TestAlgebra::new(
            "prod(L2,L2,L2)",
            Algebra::direct_product(vec![l2.clone(), l2.clone(), l2]).expect("product"),
        ));
    }
    out
}

pub fn rational_chain_corpus() -> Vec<TestAlgebra> {
    vec![
        TestAlgebra::new("lukasiewicz:q", Algebra::lukasiewicz_rational()),
        TestAlgebra::new("godel:q", Algebra::godel_rational()),
        TestAlgebra::new("product:q", Algebra::product_rational()),
    ]
}

/// The full corpus: generated finite chains, fixed products, rational
/// chains.
pub fn corpus(cfg: &GeneratorConfig) -> Vec<TestAlgebra> {
    let mut out = gen_finite_bl_chains(cfg.max_chain_size, cfg.max_tower_components);
    out.extend(product_corpus(cfg));
    out.extend(rational_chain_corpus());
    out
}

/// Seeded good-sequence sample with support length at most `max_len`.
pub fn sample_goodseq(
    alg: &Algebra,
    rng: &mut impl Rng,
    max_len: usize,
    denom_cap: u64,
) -> GoodSeq {
    if alg.is_chain() {
        let p = rng.gen_range(0..max_len);
        let mut entries = vec![alg.v_top(); p];
        if rng.gen_bool(0.85) {
            entries.push(alg.sample_value(rng, denom_cap));
        }
        return GoodSeq::from_values(alg, entries).expect("chain shape is good");
    }
    if let Ok(factors) = crate::goodseq::product_factors(alg) {
        // coordinatewise run-and-tail shapes with a shared support bound
        let mut coords = Vec::new();
        let mut maxl = 0usize;
        for f in &factors {
            let run = rng.gen_range(0..max_len);
            let tail = if rng.gen_bool(0.85) {
                Some(f.sample_value(rng, denom_cap))
            } else {
                None
            };
            maxl = maxl.max(run + tail.is_some() as usize);
            coords.push((run, tail));
        }
        let mut entries = Vec::new();
        for i in 0..maxl {
            let tuple: Vec<Value> = factors
                .iter()
                .zip(&coords)
                .map(|(f, (run, tail))| {
                    if i < *run {
                        f.v_top()
                    } else if i == *run {
                        tail.clone().unwrap_or_else(|| f.v_bottom())
                    } else {
                        f.v_bottom()
                    }
                })
                .collect();
            entries.push(Value::Tuple(tuple));
        }
        return GoodSeq::from_values(alg, entries).expect("coordinatewise shape is good");
    }
    // generic finite algebra: random walk respecting the adjacency law
    let carrier = alg.carrier().expect("finite").to_vec();
    let bot = alg.v_bottom();
    let mut entries: Vec<Value> = Vec::new();
    let first = alg.sample_value(rng, denom_cap);
    if first != bot {
        entries.push(first);
        while entries.len() < max_len {
            let last = entries.last().expect("nonempty");
            let exts: Vec<&Value> = carrier
                .iter()
                .filter(|e| **e != bot && alg.v_add(last, e) == *last)
                .collect();
            if exts.is_empty() || rng.gen_bool(0.5) {
                break;
            }
            entries.push(exts[rng.gen_range(0..exts.len())].clone());
        }
    }
    GoodSeq::from_values(alg, entries).expect("walk respects the law")
}

/// Seeded formal-difference sample.
pub fn sample_group_elt(
    alg: &Algebra,
    rng: &mut impl Rng,
    max_len: usize,
    denom_cap: u64,
) -> GroupElt {
    GroupElt::from_seqs(
        sample_goodseq(alg, rng, max_len, denom_cap),
        sample_goodseq(alg, rng, max_len, denom_cap),
    )
}
