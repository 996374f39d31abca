//! The group of formal differences of good sequences: classes `[a,b]` under
//! the relation `(a,b) ~ (c,d) iff a+d+k = b+c+k for some k`, with the
//! translation-invariant order, lattice structure, strong unit `[(1),(0)]`,
//! the center/radical decomposition, and the concrete isomorphisms for
//! idempotent and product chains.
//!
//! Class equality is a decision procedure, not structural equality. The
//! three strategies are explicit and never auto-guessed:
//!
//! - `Cancellative` decides `a+d = b+c` directly and is refused unless the
//!   algebra is verified to be of cancellative type;
//! - `ChainSearch` searches the witness `k` over single-entry sequences,
//!   which suffices over chains because every good sequence is a unit run
//!   plus a single entry and prepending a unit run is injective;
//! - `BoundedGeneral` enumerates witnesses with a unit-free first entry up
//!   to a length bound and reports `Unknown` when truncated.

use crate::algebra::{Algebra, AlgebraData, CancellativeStatus, ChainKind, Elt, Value};
use crate::error::{Error, Result};
use crate::goodseq::GoodSeq;
use crate::rat::Q;
use num_traits::One;
use std::collections::BTreeSet;

/// How to decide the class relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Cancellative,
    ChainSearch,
    BoundedGeneral { bound: usize },
}

impl Strategy {
    /// Default general bound: carrier size + 2.
    pub fn bounded_default(alg: &Algebra) -> Result<Strategy> {
        let n = alg.carrier_len().ok_or_else(|| {
            Error::UnsupportedShape("bounded witness search needs a finite carrier".into())
        })?;
        Ok(Strategy::BoundedGeneral { bound: n + 2 })
    }

    /// A sound strategy for the given algebra, when one exists.
    pub fn preferred(alg: &Algebra) -> Result<Strategy> {
        if alg.is_cancellative_type().is_cancellative() {
            Ok(Strategy::Cancellative)
        } else if alg.is_chain() {
            Ok(Strategy::ChainSearch)
        } else if alg.is_finite() {
            Self::bounded_default(alg)
        } else {
            Err(Error::UnsupportedShape(format!(
                "no sound equality strategy for {}",
                alg.describe()
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqDecision {
    Equal,
    NotEqual,
    /// Only the bounded strategy can be inconclusive.
    Unknown { bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeqDecision {
    Leq,
    NotLeq,
    Unknown { bound: usize },
}

/// A formal difference `[pos, neg]` of good sequences.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElt {
    pos: GoodSeq,
    neg: GoodSeq,
}

impl GroupElt {
    pub fn new(alg: &Algebra, pos: GoodSeq, neg: GoodSeq) -> Result<GroupElt> {
        pos.check_alg(alg)?;
        neg.check_alg(alg)?;
        Ok(GroupElt { pos, neg })
    }

    pub fn zero(alg: &Algebra) -> GroupElt {
        GroupElt {
            pos: GoodSeq::zero(alg),
            neg: GoodSeq::zero(alg),
        }
    }

    /// The strong unit `[(1),(0)]`.
    pub fn unit(alg: &Algebra) -> GroupElt {
        GroupElt {
            pos: GoodSeq::unit_run(alg, 1),
            neg: GoodSeq::zero(alg),
        }
    }

    /// `n * unit = [(1^n),(0)]`.
    pub fn unit_multiple(alg: &Algebra, n: usize) -> GroupElt {
        GroupElt {
            pos: GoodSeq::unit_run(alg, n),
            neg: GoodSeq::zero(alg),
        }
    }

    /// The positive single-entry class `[(e),(0)]`.
    pub fn from_elt(alg: &Algebra, e: &Elt) -> Result<GroupElt> {
        Ok(GroupElt {
            pos: GoodSeq::single(alg, e)?,
            neg: GoodSeq::zero(alg),
        })
    }

    pub fn from_seqs(pos: GoodSeq, neg: GoodSeq) -> GroupElt {
        GroupElt { pos, neg }
    }

    pub fn pos_seq(&self) -> &GoodSeq {
        &self.pos
    }

    pub fn neg_seq(&self) -> &GoodSeq {
        &self.neg
    }

    pub fn add(&self, alg: &Algebra, other: &GroupElt) -> Result<GroupElt> {
        Ok(GroupElt {
            pos: self.pos.add(alg, &other.pos)?,
            neg: self.neg.add(alg, &other.neg)?,
        })
    }

    /// `-[a,b] = [b,a]`.
    pub fn negate(&self) -> GroupElt {
        GroupElt {
            pos: self.neg.clone(),
            neg: self.pos.clone(),
        }
    }

    pub fn sub(&self, alg: &Algebra, other: &GroupElt) -> Result<GroupElt> {
        self.add(alg, &other.negate())
    }

    pub fn scalar(&self, alg: &Algebra, n: i64) -> Result<GroupElt> {
        let base = if n < 0 { self.negate() } else { self.clone() };
        let mut acc = GroupElt::zero(alg);
        for _ in 0..n.unsigned_abs() {
            acc = acc.add(alg, &base)?;
        }
        Ok(acc)
    }

    pub fn render(&self, alg: &Algebra) -> String {
        format!("[{},{}]", self.pos.render(alg), self.neg.render(alg))
    }
}

fn check_strategy_license(alg: &Algebra, strategy: Strategy) -> Result<()> {
    match strategy {
        Strategy::Cancellative => match alg.is_cancellative_type() {
            CancellativeStatus::Cancellative => Ok(()),
            CancellativeStatus::NotCancellative { .. } => Err(Error::StrategyMisuse(format!(
                "{} is not of cancellative type; direct comparison is unsound",
                alg.describe()
            ))),
            CancellativeStatus::Undecided { reason } => Err(Error::StrategyMisuse(format!(
                "cancellative type undecided for {}: {reason}",
                alg.describe()
            ))),
        },
        Strategy::ChainSearch => {
            if alg.is_chain() {
                Ok(())
            } else {
                Err(Error::StrategyMisuse(format!(
                    "chain search needs a totally ordered algebra, got {}",
                    alg.describe()
                )))
            }
        }
        Strategy::BoundedGeneral { .. } => {
            if alg.is_finite() {
                Ok(())
            } else {
                Err(Error::UnsupportedShape(
                    "bounded witness search needs a finite carrier".into(),
                ))
            }
        }
    }
}

/// Candidate single-entry witnesses for the chain search: the whole carrier
/// when finite, otherwise the closure of the entries of both sides under
/// {*, +, /\} together with 0 and 1, capped at 512 values.
fn chain_witness_values(alg: &Algebra, lhs: &GoodSeq, rhs: &GoodSeq) -> Vec<Value> {
    if let Some(c) = alg.carrier() {
        return c.to_vec();
    }
    let mut set: BTreeSet<Value> = BTreeSet::new();
    set.insert(alg.v_bottom());
    set.insert(alg.v_top());
    set.extend(lhs.entries().iter().cloned());
    set.extend(rhs.entries().iter().cloned());
    // worklist closure: only pair new values against the accumulated set
    let mut frontier: Vec<Value> = set.iter().cloned().collect();
    'closure: while !frontier.is_empty() && set.len() < 512 {
        let batch = std::mem::take(&mut frontier);
        let all: Vec<Value> = set.iter().cloned().collect();
        for x in &batch {
            for y in all.iter().chain(batch.iter()) {
                for r in [
                    alg.v_otimes(x, y),
                    alg.v_add(x, y),
                    alg.v_meet(x, y),
                    alg.v_add(y, x),
                ] {
                    if set.insert(r.clone()) {
                        frontier.push(r);
                        if set.len() >= 512 {
                            break 'closure;
                        }
                    }
                }
            }
        }
    }
    set.into_iter().collect()
}

enum Rel {
    Eq,
    Leq,
}

/// Shared decision core: does some k satisfy (lhs + k) REL (rhs + k)?
fn decide(
    alg: &Algebra,
    g: &GroupElt,
    h: &GroupElt,
    strategy: Strategy,
    rel: Rel,
) -> Result<EqDecision> {
    g.pos.check_alg(alg)?;
    h.pos.check_alg(alg)?;
    check_strategy_license(alg, strategy)?;
    let lhs = g.pos.add(alg, &h.neg)?;
    let rhs = g.neg.add(alg, &h.pos)?;
    let holds = |l: &GoodSeq, r: &GoodSeq| -> Result<bool> {
        Ok(match rel {
            Rel::Eq => l == r,
            Rel::Leq => l.leq(alg, r)?,
        })
    };

    match strategy {
        Strategy::Cancellative => Ok(if holds(&lhs, &rhs)? {
            EqDecision::Equal
        } else {
            EqDecision::NotEqual
        }),
        Strategy::ChainSearch => {
            for t in chain_witness_values(alg, &lhs, &rhs) {
                let k = GoodSeq::from_values(alg, vec![t])?;
                if holds(&lhs.add(alg, &k)?, &rhs.add(alg, &k)?)? {
                    return Ok(EqDecision::Equal);
                }
            }
            Ok(EqDecision::NotEqual)
        }
        Strategy::BoundedGeneral { bound } => {
            let carrier = alg.carrier().expect("licensed above").to_vec();
            let bot = alg.v_bottom();
            let top = alg.v_top();
            if holds(&lhs, &rhs)? {
                return Ok(EqDecision::Equal);
            }
            // Depth-first over good sequences with a unit-free first entry;
            // every witness reduces to this shape because k = (1^m) + k' and
            // prepending a unit run is injective.
            let mut stack: Vec<Vec<Value>> = carrier
                .iter()
                .filter(|v| **v != bot && **v != top)
                .map(|v| vec![v.clone()])
                .collect();
            stack.reverse();
            let mut truncated = false;
            while let Some(entries) = stack.pop() {
                let k = GoodSeq::from_values(alg, entries.clone())?;
                if holds(&lhs.add(alg, &k)?, &rhs.add(alg, &k)?)? {
                    return Ok(EqDecision::Equal);
                }
                let last = entries.last().expect("nonempty");
                let extensions: Vec<Value> = carrier
                    .iter()
                    .filter(|e| **e != bot && alg.v_add(last, e) == *last)
                    .cloned()
                    .collect();
                if entries.len() >= bound {
                    if !extensions.is_empty() {
                        truncated = true;
                    }
                    continue;
                }
                for e in extensions.into_iter().rev() {
                    let mut next = entries.clone();
                    next.push(e);
                    stack.push(next);
                }
            }
            Ok(if truncated {
                EqDecision::Unknown { bound }
            } else {
                EqDecision::NotEqual
            })
        }
    }
}

/// Class equality `[a,b] = [c,d]`: some k with a+d+k = b+c+k.
pub fn class_eq(
    alg: &Algebra,
    g: &GroupElt,
    h: &GroupElt,
    strategy: Strategy,
) -> Result<EqDecision> {
    decide(alg, g, h, strategy, Rel::Eq)
}

/// Class order `[a,b] <= [c,d]`: some k with a+d+k <= b+c+k componentwise.
pub fn class_leq(
    alg: &Algebra,
    g: &GroupElt,
    h: &GroupElt,
    strategy: Strategy,
) -> Result<LeqDecision> {
    Ok(match decide(alg, g, h, strategy, Rel::Leq)? {
        EqDecision::Equal => LeqDecision::Leq,
        EqDecision::NotEqual => LeqDecision::NotLeq,
        EqDecision::Unknown { bound } => LeqDecision::Unknown { bound },
    })
}

/// `[a,b] \/ [c,d] = [(a+d) \/ (b+c), b+d]`.
pub fn group_join(alg: &Algebra, g: &GroupElt, h: &GroupElt) -> Result<GroupElt> {
    let l = g.pos.add(alg, &h.neg)?;
    let r = g.neg.add(alg, &h.pos)?;
    GroupElt::new(alg, l.join(alg, &r)?, g.neg.add(alg, &h.neg)?)
}

/// `[a,b] /\ [c,d] = [(a+d) /\ (b+c), b+d]`.
pub fn group_meet(alg: &Algebra, g: &GroupElt, h: &GroupElt) -> Result<GroupElt> {
    let l = g.pos.add(alg, &h.neg)?;
    let r = g.neg.add(alg, &h.pos)?;
    GroupElt::new(alg, l.meet(alg, &r)?, g.neg.add(alg, &h.neg)?)
}

/// Membership in the radical summand: both sides have the same entrywise
/// double negation. Class invariance is a tested property.
pub fn in_s_l(alg: &Algebra, g: &GroupElt) -> Result<bool> {
    Ok(g.pos.double_neg(alg)? == g.neg.double_neg(alg)?)
}

/// The two-part decomposition of `[a,b]`: a center part `[~~a, ~~b]` living
/// over the MV-center, and the radical part `[a + ~~b, b + ~~a]` whose two
/// sides double-negate equally. Their sum recombines to the original class
/// with witness k = (0).
pub struct ThetaParts {
    pub center: Algebra,
    pub mv_part: GroupElt,
    pub s_part: GroupElt,
}

pub fn theta_decompose(alg: &Algebra, g: &GroupElt) -> Result<ThetaParts> {
    let center = alg.mv_center()?;
    let nn_pos = g.pos.double_neg(alg)?;
    let nn_neg = g.neg.double_neg(alg)?;
    let mv_part = GroupElt::new(
        &center,
        GoodSeq::from_values(&center, nn_pos.entries().to_vec())?,
        GoodSeq::from_values(&center, nn_neg.entries().to_vec())?,
    )?;
    let s_part = GroupElt::new(alg, g.pos.add(alg, &nn_neg)?, g.neg.add(alg, &nn_pos)?)?;
    Ok(ThetaParts {
        center,
        mv_part,
        s_part,
    })
}

/// Embed a class over the MV-center into the group of the full algebra.
pub fn lift_from_center(alg: &Algebra, center: &Algebra, g: &GroupElt) -> Result<GroupElt> {
    g.pos.check_alg(center)?;
    GroupElt::new(
        alg,
        GoodSeq::from_values(alg, g.pos.entries().to_vec())?,
        GoodSeq::from_values(alg, g.neg.entries().to_vec())?,
    )
}

/// Canonical run-and-tail data over a chain: `[a,b] ~ [(1^p,x),(1^q,y)]`
/// with x, y both nonzero. A side that is a unit run `(1^m)` reads as
/// `p = m, x = 1`; a zero side is first rewritten by adding `(1)` to both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCanonical {
    pub p: usize,
    pub pos_tail: Elt,
    pub q: usize,
    pub neg_tail: Elt,
}

impl ChainCanonical {
    /// Rebuild the canonical representative pair.
    pub fn to_group_elt(&self, alg: &Algebra) -> Result<GroupElt> {
        Ok(GroupElt {
            pos: canonical_side(alg, self.p, &self.pos_tail)?,
            neg: canonical_side(alg, self.q, &self.neg_tail)?,
        })
    }

    pub fn render(&self, alg: &Algebra) -> String {
        let side = |p: usize, tail: &Elt| -> String {
            canonical_side(alg, p, tail)
                .map(|s| s.render(alg))
                .unwrap_or_else(|_| "?".into())
        };
        format!(
            "[{},{}]",
            side(self.p, &self.pos_tail),
            side(self.q, &self.neg_tail)
        )
    }
}

fn canonical_side(alg: &Algebra, p: usize, tail: &Elt) -> Result<GoodSeq> {
    let mut entries = vec![alg.v_top(); p];
    if tail.value() != &alg.v_top() {
        entries.push(tail.value().clone());
    }
    GoodSeq::from_values(alg, entries)
}

pub fn chain_canonical(alg: &Algebra, g: &GroupElt) -> Result<ChainCanonical> {
    if !alg.is_chain() {
        return Err(Error::UnsupportedShape(
            "canonical run-and-tail form needs a totally ordered algebra".into(),
        ));
    }
    g.pos.check_alg(alg)?;
    let (mut a, mut b) = (g.pos.clone(), g.neg.clone());
    if a.is_zero() || b.is_zero() {
        let one = GoodSeq::unit_run(alg, 1);
        a = a.add(alg, &one)?;
        b = b.add(alg, &one)?;
    }
    let split = |s: &GoodSeq| -> Result<(usize, Elt)> {
        let (p, tail) = s.chain_normal_form(alg)?;
        if tail == alg.bottom() {
            // a pure unit run (1^p): the tail reads as the unit itself
            Ok((p, alg.top()))
        } else {
            Ok((p, tail))
        }
    };
    let (p, pos_tail) = split(&a)?;
    let (q, neg_tail) = split(&b)?;
    Ok(ChainCanonical {
        p,
        pos_tail,
        q,
        neg_tail,
    })
}

/// Over an idempotent chain the group collapses to the integers: the class
/// of `[(1^p,a),(1^q,b)]` with both tails nonzero maps to the difference of
/// the support lengths (p+1) - (q+1) = p - q, and a pure unit run `(1^m)`
/// counts as support m. Support length is the class invariant: entrywise
/// double negation is additive, support-preserving, and collapses the
/// chain onto unit runs over the two-element center.
pub fn godel_to_int(alg: &Algebra, g: &GroupElt) -> Result<i64> {
    if !alg.is_idempotent_chain() {
        return Err(Error::UnsupportedShape(format!(
            "integer collapse needs an idempotent chain, got {}",
            alg.describe()
        )));
    }
    g.pos.check_alg(alg)?;
    Ok(g.pos.len() as i64 - g.neg.len() as i64)
}

/// Over the rational product chain the group is the lex pair (m, x/y): the
/// support-length difference of the two sides, and the ratio of their last
/// entries (after the zero-side rewrite). Support length is the integer
/// invariant for the same reason as in the idempotent case; the ratio is
/// additive because the last entry of a sum of runs-with-tails is the
/// product of the tails.
pub fn product_iso(alg: &Algebra, g: &GroupElt) -> Result<(i64, Q)> {
    let is_product = matches!(
        alg.data(),
        AlgebraData::StandardChain {
            kind: ChainKind::Product,
            ..
        }
    );
    if !is_product {
        return Err(Error::UnsupportedShape(format!(
            "lex-pair collapse needs a product chain, got {}",
            alg.describe()
        )));
    }
    g.pos.check_alg(alg)?;
    let m = g.pos.len() as i64 - g.neg.len() as i64;
    let c = chain_canonical(alg, g)?;
    let ratio = match (c.pos_tail.value(), c.neg_tail.value()) {
        (Value::Rat(x), Value::Rat(y)) => x / y,
        _ => unreachable!("product chain values are rational"),
    };
    Ok((m, ratio))
}

pub fn render_product_iso(m: i64, r: &Q) -> String {
    format!("φ=({m}, {r})")
}

/// The divisible-pair group of a product chain: classes of pairs of nonzero
/// elements under `(x,y) == (a,b) iff x*b = a*y`, with `[a,b]+[c,d] =
/// [a*c, b*d]` and `[a,b] <= [c,d] iff a*d <= b*c`. Identity `[1,1]`; the
/// nonzero carrier embeds as the negative cone via `a -> [a,1]`.
pub struct HGroup {
    alg: Algebra,
}

/// Canonical pair: at least one of the two components is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HElt {
    pub num: Q,
    pub den: Q,
}

impl HGroup {
    pub fn new(alg: &Algebra) -> Result<HGroup> {
        match alg.data() {
            AlgebraData::StandardChain {
                kind: ChainKind::Product,
                ..
            } => Ok(HGroup { alg: alg.clone() }),
            _ => Err(Error::UnsupportedShape(format!(
                "divisible-pair group needs a product chain, got {}",
                alg.describe()
            ))),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    fn canonical(ratio: Q) -> HElt {
        if ratio <= Q::one() {
            HElt {
                num: ratio,
                den: Q::one(),
            }
        } else {
            HElt {
                num: Q::one(),
                den: ratio.recip(),
            }
        }
    }

    /// Class of the pair (a, b); both must be nonzero elements of (0,1].
    pub fn elt(&self, a: &Q, b: &Q) -> Result<HElt> {
        use num_traits::Zero;
        for v in [a, b] {
            if v.is_zero() || !crate::rat::is_unit_interval(v) {
                return Err(Error::NotInCarrier(format!("{v} is not in (0,1]")));
            }
        }
        Ok(Self::canonical(a / b))
    }

    pub fn zero(&self) -> HElt {
        HElt {
            num: Q::one(),
            den: Q::one(),
        }
    }

    pub fn add(&self, x: &HElt, y: &HElt) -> HElt {
        Self::canonical((&x.num * &y.num) / (&x.den * &y.den))
    }

    pub fn negate(&self, x: &HElt) -> HElt {
        Self::canonical(&x.den / &x.num)
    }

    pub fn leq(&self, x: &HElt, y: &HElt) -> bool {
        // [a,b] <= [c,d] iff a*d <= b*c
        &x.num * &y.den <= &x.den * &y.num
    }

    /// The order embedding into the radical summand: `[a,b] -> [(a),(b)]`.
    pub fn to_group_elt(&self, x: &HElt) -> Result<GroupElt> {
        let a = self.alg.elt_rat(x.num.clone())?;
        let b = self.alg.elt_rat(x.den.clone())?;
        Ok(GroupElt {
            pos: GoodSeq::single(&self.alg, &a)?,
            neg: GoodSeq::single(&self.alg, &b)?,
        })
    }

    pub fn render(&self, x: &HElt) -> String {
        format!("[{},{}]", x.num, x.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::q;

    fn luk() -> Algebra {
        Algebra::lukasiewicz_rational()
    }

    fn godel() -> Algebra {
        Algebra::godel_rational()
    }

    fn product() -> Algebra {
        Algebra::product_rational()
    }

    fn cls(alg: &Algebra, pos: &str, neg: &str) -> GroupElt {
        GroupElt::new(
            alg,
            GoodSeq::parse(alg, pos).unwrap(),
            GoodSeq::parse(alg, neg).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn class_eq_examples() {
        let l = luk();
        // (3/4)+(0) = (3/4) and (1/4)+(1/2) = (3/4)
        let g = cls(&l, "(3/4)", "(1/4)");
        let h = cls(&l, "(1/2)", "(0)");
        assert_eq!(
            class_eq(&l, &g, &h, Strategy::Cancellative).unwrap(),
            EqDecision::Equal
        );
        assert_eq!(
            class_eq(&l, &g, &h, Strategy::ChainSearch).unwrap(),
            EqDecision::Equal
        );

        let go = godel();
        let g = cls(&go, "(1/2)", "(3/4)");
        assert_eq!(
            class_eq(&go, &g, &GroupElt::zero(&go), Strategy::ChainSearch).unwrap(),
            EqDecision::Equal
        );
        // direct comparison is refused off cancellative type
        assert!(matches!(
            class_eq(&go, &g, &GroupElt::zero(&go), Strategy::Cancellative),
            Err(Error::StrategyMisuse(_))
        ));

        let p = product();
        let g = cls(&p, "(1/2)", "(1/4)");
        assert_eq!(
            class_eq(&p, &g, &GroupElt::zero(&p), Strategy::ChainSearch).unwrap(),
            EqDecision::NotEqual
        );

        // structural equality always holds with k = (0)
        let any = cls(&p, "(1,1/3)", "(1/5)");
        assert_eq!(
            class_eq(&p, &any, &any, Strategy::Cancellative).unwrap(),
            EqDecision::Equal
        );
    }

    #[test]
    fn group_law_examples() {
        let l = luk();
        let g = cls(&l, "(1/2)", "(0)");
        let h = cls(&l, "(3/4)", "(0)");
        let s = g.add(&l, &h).unwrap();
        assert_eq!(s.render(&l), "[(1,1/4),(0)]");

        // g + (-g) ~ 0
        let z = g.add(&l, &g.negate()).unwrap();
        assert_eq!(
            class_eq(&l, &z, &GroupElt::zero(&l), Strategy::Cancellative).unwrap(),
            EqDecision::Equal
        );
    }

    #[test]
    fn strong_unit_dominates() {
        let l = luk();
        let g = cls(&l, "(1,1/2)", "(0)");
        let two_u = GroupElt::unit_multiple(&l, 2);
        assert_eq!(
            class_leq(&l, &g, &two_u, Strategy::Cancellative).unwrap(),
            LeqDecision::Leq
        );
        assert_eq!(
            class_leq(
                &l,
                &GroupElt::zero(&l),
                &GroupElt::unit(&l),
                Strategy::ChainSearch
            )
            .unwrap(),
            LeqDecision::Leq
        );
    }

    #[test]
    fn order_examples_on_product() {
        let p = product();
        let below = cls(&p, "(1/4)", "(1/2)");
        let above = cls(&p, "(1/2)", "(1/4)");
        let zero = GroupElt::zero(&p);
        assert_eq!(
            class_leq(&p, &below, &zero, Strategy::ChainSearch).unwrap(),
            LeqDecision::Leq
        );
        assert_eq!(
            class_leq(&p, &zero, &above, Strategy::ChainSearch).unwrap(),
            LeqDecision::Leq
        );
        assert_eq!(
            class_leq(&p, &above, &zero, Strategy::ChainSearch).unwrap(),
            LeqDecision::NotLeq
        );
    }

    #[test]
    fn join_example() {
        let l = luk();
        let g = cls(&l, "(1/4)", "(1/2)");
        let j = group_join(&l, &g, &GroupElt::zero(&l)).unwrap();
        // [(1/4) \/ (1/2), (1/2)] = [(1/2),(1/2)] ~ 0
        assert_eq!(j.render(&l), "[(1/2),(1/2)]");
        assert_eq!(
            class_eq(&l, &j, &GroupElt::zero(&l), Strategy::Cancellative).unwrap(),
            EqDecision::Equal
        );
        // idempotence up to class equality
        let jj = group_join(&l, &g, &g).unwrap();
        assert_eq!(
            class_eq(&l, &jj, &g, Strategy::Cancellative).unwrap(),
            EqDecision::Equal
        );
    }

    #[test]
    fn theta_on_mv_algebra_has_trivial_radical_part() {
        // over an MV-algebra double negation is the identity, so the
        // radical part is [a+b, b+a] ~ 0
        let l = luk();
        let g = cls(&l, "(1,1/3)", "(2/5)");
        let parts = theta_decompose(&l, &g).unwrap();
        assert_eq!(parts.center, l);
        assert_eq!(
            class_eq(&l, &parts.s_part, &GroupElt::zero(&l), Strategy::Cancellative).unwrap(),
            EqDecision::Equal
        );
        assert_eq!(
            class_eq(&l, &parts.mv_part, &g, Strategy::Cancellative).unwrap(),
            EqDecision::Equal
        );
    }

    #[test]
    fn theta_on_idempotent_chain() {
        // [(1,1/2),(3/4)]: both double negations saturate, the center part
        // carries the integer content and the radical part collapses
        let g = godel();
        let x = cls(&g, "(1,1/2)", "(3/4)");
        let parts = theta_decompose(&g, &x).unwrap();
        assert!(in_s_l(&g, &parts.s_part).unwrap());
        assert_eq!(
            class_eq(&g, &parts.s_part, &GroupElt::zero(&g), Strategy::ChainSearch).unwrap(),
            EqDecision::Equal
        );
        // the center is the two-element algebra; the center part is
        // [(1,1),(1)], the class of one unit
        let lifted = lift_from_center(&g, &parts.center, &parts.mv_part).unwrap();
        assert_eq!(
            class_eq(&g, &lifted, &GroupElt::unit(&g), Strategy::ChainSearch).unwrap(),
            EqDecision::Equal
        );
        assert_eq!(godel_to_int(&g, &x).unwrap(), 1);
    }

    #[test]
    fn theta_on_product_chain() {
        let p = product();
        let g = cls(&p, "(1/2)", "(1/4)");
        let parts = theta_decompose(&p, &g).unwrap();
        // both entries double-negate to 1, so the center part is [(1),(1)] ~ 0
        assert_eq!(
            class_eq(
                &parts.center,
                &parts.mv_part,
                &GroupElt::zero(&parts.center),
                Strategy::preferred(&parts.center).unwrap()
            )
            .unwrap(),
            EqDecision::Equal
        );
        assert!(in_s_l(&p, &parts.s_part).unwrap());
        assert_eq!(
            class_eq(&p, &parts.s_part, &g, Strategy::ChainSearch).unwrap(),
            EqDecision::Equal
        );
        // recomposition has witness k = (0)
        let lifted = lift_from_center(&p, &parts.center, &parts.mv_part).unwrap();
        let sum = lifted.add(&p, &parts.s_part).unwrap();
        assert_eq!(
            class_eq(&p, &sum, &g, Strategy::ChainSearch).unwrap(),
            EqDecision::Equal
        );
    }

    #[test]
    fn s_l_membership_examples() {
        let p = product();
        assert!(in_s_l(&p, &GroupElt::zero(&p)).unwrap());
        assert!(in_s_l(&p, &cls(&p, "(1/2)", "(1/4)")).unwrap());
        assert!(!in_s_l(&p, &GroupElt::unit(&p)).unwrap());
    }

    #[test]
    fn chain_canonical_examples() {
        let p = product();
        // [(0),(1/2)] rewrites to [(1),(1,1/2)]
        let g = cls(&p, "(0)", "(1/2)");
        let c = chain_canonical(&p, &g).unwrap();
        assert_eq!((c.p, c.q), (1, 1));
        assert_eq!(c.pos_tail, p.top());
        assert_eq!(c.neg_tail, p.elt_q(1, 2).unwrap());
        assert_eq!(c.render(&p), "[(1),(1,1/2)]");
        // the rewrite stays in the class
        let back = c.to_group_elt(&p).unwrap();
        assert_eq!(
            class_eq(&p, &back, &g, Strategy::ChainSearch).unwrap(),
            EqDecision::Equal
        );

        // symmetric rule
        let h = cls(&p, "(1/2)", "(0)");
        let c = chain_canonical(&p, &h).unwrap();
        assert_eq!(c.render(&p), "[(1,1/2),(1)]");

        // already canonical: unchanged
        let k = cls(&p, "(1^2,1/3)", "(1,1/2)");
        let c = chain_canonical(&p, &k).unwrap();
        assert_eq!((c.p, c.q), (2, 1));
        assert_eq!(c.pos_tail, p.elt_q(1, 3).unwrap());
        assert_eq!(c.neg_tail, p.elt_q(1, 2).unwrap());
    }

    #[test]
    fn godel_to_int_examples() {
        let g = godel();
        assert_eq!(godel_to_int(&g, &GroupElt::zero(&g)).unwrap(), 0);
        assert_eq!(godel_to_int(&g, &GroupElt::unit(&g)).unwrap(), 1);
        let x = cls(&g, "(1^2,1/2)", "(1/3)");
        assert_eq!(godel_to_int(&g, &x).unwrap(), 2);
        // cross-check: subtracting 2 units lands in the zero class
        let shifted = x.sub(&g, &GroupElt::unit_multiple(&g, 2)).unwrap();
        assert_eq!(
            class_eq(&g, &shifted, &GroupElt::zero(&g), Strategy::ChainSearch).unwrap(),
            EqDecision::Equal
        );
        // refused off idempotent chains
        let l = luk();
        assert!(godel_to_int(&l, &GroupElt::zero(&l)).is_err());
    }

    #[test]
    fn product_iso_examples() {
        let p = product();
        assert_eq!(product_iso(&p, &GroupElt::zero(&p)).unwrap(), (0, q(1, 1)));
        assert_eq!(
            product_iso(&p, &cls(&p, "(1/2)", "(1/4)")).unwrap(),
            (0, q(2, 1))
        );
        let g = cls(&p, "(1^2,1/3)", "(1,1/2)");
        assert_eq!(product_iso(&p, &g).unwrap(), (1, q(2, 3)));
        assert_eq!(render_product_iso(1, &q(2, 3)), "φ=(1, 2/3)");
        let go = godel();
        assert!(product_iso(&go, &GroupElt::zero(&go)).is_err());
    }

    #[test]
    fn h_group_examples() {
        let p = product();
        let h = HGroup::new(&p).unwrap();
        assert!(HGroup::new(&godel()).is_err());

        let a = h.elt(&q(1, 2), &q(1, 4)).unwrap();
        let b = h.elt(&q(1, 3), &q(1, 1)).unwrap();
        let s = h.add(&a, &b);
        assert_eq!(s, h.elt(&q(1, 6), &q(1, 4)).unwrap());

        // identity maps to the zero class
        let z = h.to_group_elt(&h.zero()).unwrap();
        assert_eq!(
            class_eq(&p, &z, &GroupElt::zero(&p), Strategy::ChainSearch).unwrap(),
            EqDecision::Equal
        );

        // negative cone: [a,1] <= [1,1]
        for num in [q(1, 5), q(1, 2), q(9, 10), q(1, 1)] {
            let e = h.elt(&num, &q(1, 1)).unwrap();
            assert!(h.leq(&e, &h.zero()));
        }

        // group laws on the pair group
        let na = h.negate(&a);
        assert_eq!(h.add(&a, &na), h.zero());
        assert!(h.elt(&q(0, 1), &q(1, 2)).is_err());
    }

    #[test]
    fn bounded_general_matches_chain_search_on_a_finite_chain() {
        let l4 = Algebra::lukasiewicz_finite(4).unwrap();
        let vals: Vec<Elt> = l4
            .carrier()
            .unwrap()
            .iter()
            .map(|v| l4.elt(v.clone()).unwrap())
            .collect();
        let b = Strategy::bounded_default(&l4).unwrap();
        for x in &vals {
            for y in &vals {
                let g = GroupElt::from_elt(&l4, x).unwrap();
                let h = GroupElt::from_elt(&l4, y).unwrap();
                let via_chain = class_eq(&l4, &g, &h, Strategy::ChainSearch).unwrap();
                let via_bounded = class_eq(&l4, &g, &h, b).unwrap();
                // over a finite chain the reduced witnesses are exhausted,
                // so the bounded search is conclusive
                assert_eq!(via_chain, via_bounded);
                let via_canc = class_eq(&l4, &g, &h, Strategy::Cancellative).unwrap();
                assert_eq!(via_chain, via_canc);
            }
        }
    }
}
