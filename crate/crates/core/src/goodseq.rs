//! Finitely supported sequences satisfying the adjacency law
//! `a[i] + a[i+1] = a[i]`, stored with trailing zeros trimmed. Over a chain
//! every such sequence is a run of units followed by at most one tail
//! element. Addition is the convolution
//! `c[i] = a[i] + (a[i-1]*b[1]) + ... + (a[1]*b[i-1]) + b[i]`,
//! with the run-and-tail shortcut on chains; the two routes are
//! cross-checked in tests.

use crate::algebra::{Algebra, AlgebraData, Elt, Value};
use crate::error::{Error, Result};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GoodSeq {
    tag: u64,
    entries: Vec<Value>,
}

impl GoodSeq {
    /// The zero sequence `(0)`, the unique empty representation.
    pub fn zero(alg: &Algebra) -> GoodSeq {
        GoodSeq {
            tag: alg.tag(),
            entries: Vec::new(),
        }
    }

    /// `(1^m)`.
    pub fn unit_run(alg: &Algebra, m: usize) -> GoodSeq {
        GoodSeq {
            tag: alg.tag(),
            entries: vec![alg.v_top(); m],
        }
    }

    /// Single-entry sequence `(e)`; good in every algebra since `e + 0 = e`.
    pub fn single(alg: &Algebra, e: &Elt) -> Result<GoodSeq> {
        alg.check_tag(e)?;
        Ok(GoodSeq::from_values_unchecked(alg, vec![e.value().clone()]))
    }

    pub fn new(alg: &Algebra, entries: Vec<Elt>) -> Result<GoodSeq> {
        for e in &entries {
            alg.check_tag(e)?;
        }
        GoodSeq::from_values(alg, entries.into_iter().map(|e| e.into_value()).collect())
    }

    /// Validate membership and the adjacency law, then trim trailing zeros.
    pub fn from_values(alg: &Algebra, entries: Vec<Value>) -> Result<GoodSeq> {
        for v in &entries {
            if !alg.contains_value(v) {
                return Err(Error::NotInCarrier(alg.render_value(v)));
            }
        }
        if !is_good_values(alg, &entries) {
            return Err(Error::Construction(format!(
                "sequence {} violates the law a[i] + a[i+1] = a[i]",
                render_values(alg, &entries)
            )));
        }
        Ok(GoodSeq::from_values_unchecked(alg, entries))
    }

    fn from_values_unchecked(alg: &Algebra, mut entries: Vec<Value>) -> GoodSeq {
        let bot = alg.v_bottom();
        while entries.last() == Some(&bot) {
            entries.pop();
        }
        GoodSeq {
            tag: alg.tag(),
            entries,
        }
    }

    pub fn check_alg(&self, alg: &Algebra) -> Result<()> {
        if self.tag == alg.tag() {
            Ok(())
        } else {
            Err(Error::TagMismatch(format!(
                "good sequence does not belong to {}",
                alg.describe()
            )))
        }
    }

    pub fn entries(&self) -> &[Value] {
        &self.entries
    }

    /// Support length (trailing zeros excluded).
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based entry access; positions past the support read as 0.
    pub fn get(&self, alg: &Algebra, i: usize) -> Value {
        if i >= 1 && i <= self.entries.len() {
            self.entries[i - 1].clone()
        } else {
            alg.v_bottom()
        }
    }

    /// Definitional convolution sum; works over every algebra.
    pub fn add_convolution(&self, alg: &Algebra, other: &GoodSeq) -> Result<GoodSeq> {
        self.check_alg(alg)?;
        other.check_alg(alg)?;
        let n = self.len() + other.len();
        let mut out = Vec::with_capacity(n);
        for i in 1..=n {
            let mut acc = self.get(alg, i);
            for j in 1..i {
                let term = alg.v_otimes(&self.get(alg, i - j), &other.get(alg, j));
                acc = alg.v_add(&acc, &term);
            }
            acc = alg.v_add(&acc, &other.get(alg, i));
            out.push(acc);
        }
        GoodSeq::from_values(alg, out)
    }

    /// Run-and-tail shortcut, valid over chains:
    /// `(1^p,a) + (1^q,b) = (1^{p+q}, a+b, a*b)`.
    fn add_chain(&self, alg: &Algebra, other: &GoodSeq) -> Result<GoodSeq> {
        let (p, a) = self.chain_split(alg);
        let (q, b) = other.chain_split(alg);
        let mut out = vec![alg.v_top(); p + q];
        out.push(alg.v_add(&a, &b));
        out.push(alg.v_otimes(&a, &b));
        GoodSeq::from_values(alg, out)
    }

    /// Monoid addition: the chain shortcut when the algebra is a chain,
    /// otherwise the definitional convolution.
    pub fn add(&self, alg: &Algebra, other: &GoodSeq) -> Result<GoodSeq> {
        self.check_alg(alg)?;
        other.check_alg(alg)?;
        if alg.is_chain() {
            self.add_chain(alg, other)
        } else {
            self.add_convolution(alg, other)
        }
    }

    /// (unit-run length, tail value or bottom). Internal: does not insist
    /// the algebra is a chain, but on a chain the result is the whole story.
    fn chain_split(&self, alg: &Algebra) -> (usize, Value) {
        let top = alg.v_top();
        let p = self.entries.iter().take_while(|v| **v == top).count();
        let tail = self
            .entries
            .get(p)
            .cloned()
            .unwrap_or_else(|| alg.v_bottom());
        (p, tail)
    }

    /// Over a chain, every good sequence is `(1^p, tail)` with the tail
    /// possibly 0 (meaning the sequence is `(1^p)`).
    pub fn chain_normal_form(&self, alg: &Algebra) -> Result<(usize, Elt)> {
        self.check_alg(alg)?;
        if !alg.is_chain() {
            return Err(Error::UnsupportedShape(
                "run-and-tail normal form needs a totally ordered algebra".into(),
            ));
        }
        let (p, tail) = self.chain_split(alg);
        debug_assert!(p + if tail == alg.v_bottom() { 0 } else { 1 } == self.entries.len());
        Ok((p, alg.elt(tail)?))
    }

    /// Rebuild from run-and-tail data; the inverse of `chain_normal_form`.
    pub fn from_chain_normal_form(alg: &Algebra, p: usize, tail: &Elt) -> Result<GoodSeq> {
        alg.check_tag(tail)?;
        let mut entries = vec![alg.v_top(); p];
        entries.push(tail.value().clone());
        GoodSeq::from_values(alg, entries)
    }

    pub fn leq(&self, alg: &Algebra, other: &GoodSeq) -> Result<bool> {
        self.check_alg(alg)?;
        other.check_alg(alg)?;
        let n = self.len().max(other.len());
        for i in 1..=n {
            if !alg.v_leq(&self.get(alg, i), &other.get(alg, i)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn join(&self, alg: &Algebra, other: &GoodSeq) -> Result<GoodSeq> {
        self.check_alg(alg)?;
        other.check_alg(alg)?;
        let n = self.len().max(other.len());
        let vals = (1..=n)
            .map(|i| alg.v_join(&self.get(alg, i), &other.get(alg, i)))
            .collect();
        GoodSeq::from_values(alg, vals)
    }

    pub fn meet(&self, alg: &Algebra, other: &GoodSeq) -> Result<GoodSeq> {
        self.check_alg(alg)?;
        other.check_alg(alg)?;
        let n = self.len().max(other.len());
        let vals = (1..=n)
            .map(|i| alg.v_meet(&self.get(alg, i), &other.get(alg, i)))
            .collect();
        GoodSeq::from_values(alg, vals)
    }

    /// Entrywise double negation; good again because `~~` commutes with `+`.
    pub fn double_neg(&self, alg: &Algebra) -> Result<GoodSeq> {
        self.check_alg(alg)?;
        let vals = self
            .entries
            .iter()
            .map(|v| alg.v_neg(&alg.v_neg(v)))
            .collect();
        GoodSeq::from_values(alg, vals)
    }

    /// Coordinatewise projection onto factor `i` of a product (or of the
    /// parent product of a subalgebra).
    pub fn project(&self, alg: &Algebra, i: usize) -> Result<GoodSeq> {
        self.check_alg(alg)?;
        let factors = product_factors(alg)?;
        if i >= factors.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: factors.len(),
            });
        }
        let vals = self
            .entries
            .iter()
            .map(|v| match v {
                Value::Tuple(vs) => Ok(vs[i].clone()),
                _ => Err(Error::UnsupportedShape("entries are not tuples".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        GoodSeq::from_values(&factors[i], vals)
    }

    pub fn render(&self, alg: &Algebra) -> String {
        render_values(alg, &self.entries)
    }

    /// Parse `(a1,a2,...)` with optional `1^p` run sugar; entries are
    /// rationals or rendered element names.
    pub fn parse(alg: &Algebra, s: &str) -> Result<GoodSeq> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::MalformedTerm(format!("expected `(...)`, got `{s}`")))?;
        let mut vals = Vec::new();
        for part in split_entries(inner) {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            if let Some(p) = part.strip_prefix("1^") {
                let p: usize = p
                    .parse()
                    .map_err(|_| Error::MalformedTerm(format!("bad run length `{part}`")))?;
                vals.extend(std::iter::repeat_n(alg.v_top(), p));
                continue;
            }
            let v = if let Some(r) = crate::rat::parse_q(part) {
                let cand = Value::Rat(r);
                if alg.contains_value(&cand) {
                    cand
                } else {
                    alg.elt_named(part)?.into_value()
                }
            } else {
                alg.elt_named(part)?.into_value()
            };
            vals.push(v);
        }
        GoodSeq::from_values(alg, vals)
    }
}

/// Split a sequence body at top-level commas, respecting nested parentheses
/// in tuple entries.
fn split_entries(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' | '<' => {
                depth += 1;
                cur.push(c);
            }
            ')' | '>' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => out.push(std::mem::take(&mut cur)),
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out
}

fn render_values(alg: &Algebra, entries: &[Value]) -> String {
    if entries.is_empty() {
        return "(0)".into();
    }
    let top = alg.v_top();
    let p = entries.iter().take_while(|v| **v == top).count();
    let mut out = String::from("(");
    let mut first = true;
    if p >= 2 {
        let _ = write!(out, "1^{p}");
        first = false;
    } else if p == 1 {
        out.push('1');
        first = false;
    }
    for v in &entries[p..] {
        if !first {
            out.push(',');
        }
        out.push_str(&alg.render_value(v));
        first = false;
    }
    out.push(')');
    out
}

fn is_good_values(alg: &Algebra, entries: &[Value]) -> bool {
    for i in 0..entries.len() {
        let next = entries
            .get(i + 1)
            .cloned()
            .unwrap_or_else(|| alg.v_bottom());
        if alg.v_add(&entries[i], &next) != entries[i] {
            return false;
        }
    }
    true
}

/// The adjacency-law predicate on a raw entry list.
pub fn is_good(alg: &Algebra, entries: &[Elt]) -> Result<bool> {
    for e in entries {
        alg.check_tag(e)?;
    }
    let vals: Vec<Value> = entries.iter().map(|e| e.value().clone()).collect();
    Ok(is_good_values(alg, &vals))
}

pub(crate) fn product_factors(alg: &Algebra) -> Result<Vec<Algebra>> {
    match alg.data() {
        AlgebraData::DirectProduct { factors } => Ok(factors.clone()),
        AlgebraData::Subalgebra { parent, .. } => match parent.data() {
            AlgebraData::DirectProduct { factors } => Ok(factors.clone()),
            _ => Err(Error::UnsupportedShape(
                "projection needs a product algebra".into(),
            )),
        },
        _ => Err(Error::UnsupportedShape(
            "projection needs a product algebra".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn luk() -> Algebra {
        Algebra::lukasiewicz_rational()
    }

    fn godel() -> Algebra {
        Algebra::godel_rational()
    }

    #[test]
    fn goodness_examples() {
        let l = luk();
        let one = l.top();
        let a = l.elt_q(3, 10).unwrap();
        let b = l.elt_q(1, 10).unwrap();
        assert!(is_good(&l, &[]).unwrap());
        assert!(is_good(&l, &[one.clone()]).unwrap());
        assert!(is_good(&l, &[one.clone(), a.clone()]).unwrap());
        assert!(!is_good(&l, &[a, b]).unwrap());

        let g = godel();
        let h = g.elt_q(1, 2).unwrap();
        assert!(is_good(&g, &[g.top(), g.top(), h]).unwrap());
    }

    #[test]
    fn add_examples() {
        let l = luk();
        let a = GoodSeq::single(&l, &l.elt_q(7, 10).unwrap()).unwrap();
        let b = GoodSeq::single(&l, &l.elt_q(3, 5).unwrap()).unwrap();
        let s = a.add(&l, &b).unwrap();
        assert_eq!(s.render(&l), "(1,3/10)");

        // identity
        assert_eq!(a.add(&l, &GoodSeq::zero(&l)).unwrap(), a);

        let g = godel();
        let x = GoodSeq::single(&g, &g.elt_q(1, 2).unwrap()).unwrap();
        let y = GoodSeq::single(&g, &g.elt_q(3, 4).unwrap()).unwrap();
        assert_eq!(x.add(&g, &y).unwrap().render(&g), "(1,1/2)");
    }

    #[test]
    fn chain_shortcut_matches_convolution() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for alg in [luk(), godel(), Algebra::product_rational()] {
            for _ in 0..120 {
                let a = random_chain_seq(&alg, &mut rng);
                let b = random_chain_seq(&alg, &mut rng);
                assert_eq!(
                    a.add(&alg, &b).unwrap(),
                    a.add_convolution(&alg, &b).unwrap(),
                    "{} + {}",
                    a.render(&alg),
                    b.render(&alg)
                );
            }
        }
    }

    fn random_chain_seq(alg: &Algebra, rng: &mut ChaCha8Rng) -> GoodSeq {
        let p = rng.gen_range(0..3usize);
        let mut entries = vec![alg.v_top(); p];
        if rng.gen_bool(0.8) {
            entries.push(alg.sample_value(rng, 12));
        }
        GoodSeq::from_values(alg, entries).unwrap()
    }

    #[test]
    fn lattice_examples() {
        let l = luk();
        let a = GoodSeq::parse(&l, "(1,1/4)").unwrap();
        let b = GoodSeq::parse(&l, "(1/2)").unwrap();
        assert_eq!(a.join(&l, &b).unwrap().render(&l), "(1,1/4)");
        assert_eq!(a.meet(&l, &b).unwrap().render(&l), "(1/2)");
        assert_eq!(a.join(&l, &GoodSeq::zero(&l)).unwrap(), a);
        assert!(b.leq(&l, &a).unwrap());

        // run length dominates: (1^p,a) \/ (1^q,b) = (1^q,b) when p < q
        let p1 = GoodSeq::parse(&l, "(1,9/10)").unwrap();
        let q2 = GoodSeq::parse(&l, "(1^2,1/10)").unwrap();
        assert_eq!(p1.join(&l, &q2).unwrap(), q2);
        assert_eq!(p1.meet(&l, &q2).unwrap(), p1);
    }

    #[test]
    fn normal_form_examples() {
        let g = godel();
        let s = GoodSeq::parse(&g, "(1,1,1/2)").unwrap();
        let (p, tail) = s.chain_normal_form(&g).unwrap();
        assert_eq!((p, g.render_elt(&tail)), (2, "1/2".into()));

        let z = GoodSeq::zero(&g);
        let (p, tail) = z.chain_normal_form(&g).unwrap();
        assert_eq!((p, tail.clone()), (0, g.bottom()));

        let u3 = GoodSeq::unit_run(&g, 3);
        let (p, tail) = u3.chain_normal_form(&g).unwrap();
        assert_eq!((p, tail.clone()), (3, g.bottom()));
        assert_eq!(
            GoodSeq::from_chain_normal_form(&g, p, &tail).unwrap(),
            u3
        );
    }

    #[test]
    fn projection_examples() {
        let g = godel();
        let l = luk();
        let p = Algebra::direct_product(vec![g.clone(), l.clone()]).unwrap();
        let seq = GoodSeq::from_values(
            &p,
            vec![
                Value::Tuple(vec![g.v_top(), l.v_top()]),
                Value::Tuple(vec![Value::Rat(crate::rat::q(1, 2)), l.v_bottom()]),
            ],
        )
        .unwrap();
        assert_eq!(seq.project(&p, 0).unwrap().render(&g), "(1,1/2)");
        assert_eq!(seq.project(&p, 1).unwrap().render(&l), "(1)");
        assert!(seq.project(&p, 2).is_err());
        assert_eq!(
            GoodSeq::zero(&p).project(&p, 0).unwrap(),
            GoodSeq::zero(&g)
        );
    }

    #[test]
    fn projection_commutes_with_add() {
        let g = godel();
        let l = luk();
        let p = Algebra::direct_product(vec![g.clone(), l.clone()]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..60 {
            let a = random_product_seq(&p, &mut rng);
            let b = random_product_seq(&p, &mut rng);
            let s = a.add(&p, &b).unwrap();
            for i in 0..2 {
                let lhs = s.project(&p, i).unwrap();
                let rhs = a
                    .project(&p, i)
                    .unwrap()
                    .add(&factor(&p, i), &b.project(&p, i).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    fn factor(p: &Algebra, i: usize) -> Algebra {
        super::product_factors(p).unwrap()[i].clone()
    }

    fn random_product_seq(p: &Algebra, rng: &mut ChaCha8Rng) -> GoodSeq {
        let factors = super::product_factors(p).unwrap();
        let mut coords = Vec::new();
        let mut maxlen = 0usize;
        for f in &factors {
            let run = rng.gen_range(0..3usize);
            let tail = if rng.gen_bool(0.8) {
                Some(f.sample_value(rng, 8))
            } else {
                None
            };
            let len = run + tail.is_some() as usize;
            maxlen = maxlen.max(len);
            coords.push((run, tail));
        }
        let mut entries = Vec::new();
        for i in 0..maxlen {
            let mut t = Vec::new();
            for (f, (run, tail)) in factors.iter().zip(&coords) {
                let v = if i < *run {
                    f.v_top()
                } else if i == *run {
                    tail.clone().unwrap_or_else(|| f.v_bottom())
                } else {
                    f.v_bottom()
                };
                t.push(v);
            }
            entries.push(Value::Tuple(t));
        }
        GoodSeq::from_values(p, entries).unwrap()
    }

    #[test]
    fn prepend_law_matches_convolution() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = godel();
        let l = luk();
        let p = Algebra::direct_product(vec![g.clone(), l.clone()]).unwrap();
        for _ in 0..40 {
            let x = random_product_seq(&p, &mut rng);
            for m in 0..3usize {
                let run = GoodSeq::unit_run(&p, m);
                let sum = run.add_convolution(&p, &x).unwrap();
                let mut expect = vec![p.v_top(); m];
                expect.extend_from_slice(x.entries());
                assert_eq!(sum, GoodSeq::from_values(&p, expect).unwrap());
            }
        }
    }

    #[test]
    fn conical_on_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let l = luk();
        for _ in 0..60 {
            let a = random_chain_seq(&l, &mut rng);
            let b = random_chain_seq(&l, &mut rng);
            if a.add(&l, &b).unwrap().is_zero() {
                assert!(a.is_zero() && b.is_zero());
            }
        }
    }

    #[test]
    fn support_bound() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let g = godel();
        let l = luk();
        let p = Algebra::direct_product(vec![g, l]).unwrap();
        for _ in 0..60 {
            let a = random_product_seq(&p, &mut rng);
            let b = random_product_seq(&p, &mut rng);
            let s = a.add(&p, &b).unwrap();
            assert!(s.len() <= a.len() + b.len());
        }
    }

    #[test]
    fn render_and_parse_round_trip() {
        let l = luk();
        for s in ["(0)", "(1)", "(1^3,1/2)", "(1,1/4)", "(1/3)"] {
            let seq = GoodSeq::parse(&l, s).unwrap();
            assert_eq!(seq.render(&l), s.replace("(1^1,", "(1,"));
        }
        assert!(GoodSeq::parse(&l, "(3/10,1/10)").is_err());
        assert!(GoodSeq::parse(&l, "junk").is_err());
    }
}
