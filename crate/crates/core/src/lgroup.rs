//! Concrete lattice-ordered abelian groups with a designated strong unit.
//!
//! The implemented groups are the ones needed for the unit-interval functor
//! and its inverse: the integers, the positive rationals under
//! multiplication, finite direct products with the componentwise order, and
//! lexicographic products of depth two whose first component is totally
//! ordered.

use crate::error::{Error, Result};
use crate::rat::{parse_q, Q};
use num_traits::{One, Signed};
use rand::Rng;
use std::fmt;

/// Group structure, without the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LGroupKind {
    /// (Z, +, usual order).
    Integers,
    /// (Q_{>0}, *, usual order); the group identity is 1.
    PosRationals,
    /// Direct product with the componentwise order.
    Product(Vec<LGroupKind>),
    /// Lexicographic product; the first component must be totally ordered.
    Lex(Box<LGroupKind>, Box<LGroupKind>),
}

/// An element value, shaped to match its group descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupVal {
    Int(i64),
    PosRat(Q),
    /// Used for both product and lex values; the kind disambiguates.
    Tuple(Vec<GroupVal>),
}

impl fmt::Display for GroupVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupVal::Int(n) => write!(f, "{n}"),
            GroupVal::PosRat(r) => write!(f, "{r}"),
            GroupVal::Tuple(vs) => {
                write!(f, "(")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{v}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl LGroupKind {
    pub fn zero(&self) -> GroupVal {
        match self {
            LGroupKind::Integers => GroupVal::Int(0),
            LGroupKind::PosRationals => GroupVal::PosRat(Q::one()),
            LGroupKind::Product(ks) => GroupVal::Tuple(ks.iter().map(|k| k.zero()).collect()),
            LGroupKind::Lex(a, b) => GroupVal::Tuple(vec![a.zero(), b.zero()]),
        }
    }

    pub fn is_totally_ordered(&self) -> bool {
        match self {
            LGroupKind::Integers | LGroupKind::PosRationals => true,
            LGroupKind::Product(ks) => ks.len() <= 1 && ks.iter().all(|k| k.is_totally_ordered()),
            LGroupKind::Lex(a, b) => a.is_totally_ordered() && b.is_totally_ordered(),
        }
    }

    fn check_shape(&self, v: &GroupVal) -> bool {
        match (self, v) {
            (LGroupKind::Integers, GroupVal::Int(_)) => true,
            (LGroupKind::PosRationals, GroupVal::PosRat(r)) => r.is_positive(),
            (LGroupKind::Product(ks), GroupVal::Tuple(vs)) => {
                ks.len() == vs.len() && ks.iter().zip(vs).all(|(k, v)| k.check_shape(v))
            }
            (LGroupKind::Lex(a, b), GroupVal::Tuple(vs)) => {
                vs.len() == 2 && a.check_shape(&vs[0]) && b.check_shape(&vs[1])
            }
            _ => false,
        }
    }

    pub fn add(&self, x: &GroupVal, y: &GroupVal) -> GroupVal {
        match (self, x, y) {
            (LGroupKind::Integers, GroupVal::Int(a), GroupVal::Int(b)) => GroupVal::Int(a + b),
            (LGroupKind::PosRationals, GroupVal::PosRat(a), GroupVal::PosRat(b)) => {
                GroupVal::PosRat(a * b)
            }
            (LGroupKind::Product(ks), GroupVal::Tuple(a), GroupVal::Tuple(b)) => GroupVal::Tuple(
                ks.iter()
                    .zip(a.iter().zip(b))
                    .map(|(k, (x, y))| k.add(x, y))
                    .collect(),
            ),
            (LGroupKind::Lex(ka, kb), GroupVal::Tuple(a), GroupVal::Tuple(b)) => {
                GroupVal::Tuple(vec![ka.add(&a[0], &b[0]), kb.add(&a[1], &b[1])])
            }
            _ => panic!("group value shape mismatch"),
        }
    }

    pub fn neg(&self, x: &GroupVal) -> GroupVal {
        match (self, x) {
            (LGroupKind::Integers, GroupVal::Int(a)) => GroupVal::Int(-a),
            (LGroupKind::PosRationals, GroupVal::PosRat(a)) => GroupVal::PosRat(a.recip()),
            (LGroupKind::Product(ks), GroupVal::Tuple(a)) => {
                GroupVal::Tuple(ks.iter().zip(a).map(|(k, x)| k.neg(x)).collect())
            }
            (LGroupKind::Lex(ka, kb), GroupVal::Tuple(a)) => {
                GroupVal::Tuple(vec![ka.neg(&a[0]), kb.neg(&a[1])])
            }
            _ => panic!("group value shape mismatch"),
        }
    }

    pub fn sub(&self, x: &GroupVal, y: &GroupVal) -> GroupVal {
        self.add(x, &self.neg(y))
    }

    /// n-fold sum of `x` (n may be negative).
    pub fn scalar(&self, n: i64, x: &GroupVal) -> GroupVal {
        match (self, x) {
            (LGroupKind::Integers, GroupVal::Int(a)) => GroupVal::Int(n * a),
            (LGroupKind::PosRationals, GroupVal::PosRat(a)) => {
                let p = a.pow(n.unsigned_abs() as u32 as i32);
                GroupVal::PosRat(if n < 0 { p.recip() } else { p })
            }
            (LGroupKind::Product(ks), GroupVal::Tuple(a)) => {
                GroupVal::Tuple(ks.iter().zip(a).map(|(k, x)| k.scalar(n, x)).collect())
            }
            (LGroupKind::Lex(ka, kb), GroupVal::Tuple(a)) => {
                GroupVal::Tuple(vec![ka.scalar(n, &a[0]), kb.scalar(n, &a[1])])
            }
            _ => panic!("group value shape mismatch"),
        }
    }

    pub fn leq(&self, x: &GroupVal, y: &GroupVal) -> bool {
        match (self, x, y) {
            (LGroupKind::Integers, GroupVal::Int(a), GroupVal::Int(b)) => a <= b,
            (LGroupKind::PosRationals, GroupVal::PosRat(a), GroupVal::PosRat(b)) => a <= b,
            (LGroupKind::Product(ks), GroupVal::Tuple(a), GroupVal::Tuple(b)) => ks
                .iter()
                .zip(a.iter().zip(b))
                .all(|(k, (x, y))| k.leq(x, y)),
            (LGroupKind::Lex(ka, kb), GroupVal::Tuple(a), GroupVal::Tuple(b)) => {
                if a[0] == b[0] {
                    kb.leq(&a[1], &b[1])
                } else {
                    ka.leq(&a[0], &b[0])
                }
            }
            _ => panic!("group value shape mismatch"),
        }
    }

    pub fn join(&self, x: &GroupVal, y: &GroupVal) -> GroupVal {
        match self {
            LGroupKind::Integers | LGroupKind::PosRationals => {
                if self.leq(x, y) {
                    y.clone()
                } else {
                    x.clone()
                }
            }
            LGroupKind::Product(ks) => match (x, y) {
                (GroupVal::Tuple(a), GroupVal::Tuple(b)) => GroupVal::Tuple(
                    ks.iter()
                        .zip(a.iter().zip(b))
                        .map(|(k, (x, y))| k.join(x, y))
                        .collect(),
                ),
                _ => panic!("group value shape mismatch"),
            },
            LGroupKind::Lex(ka, kb) => match (x, y) {
                (GroupVal::Tuple(a), GroupVal::Tuple(b)) => {
                    if a[0] == b[0] {
                        GroupVal::Tuple(vec![a[0].clone(), kb.join(&a[1], &b[1])])
                    } else if ka.leq(&a[0], &b[0]) {
                        y.clone()
                    } else {
                        x.clone()
                    }
                }
                _ => panic!("group value shape mismatch"),
            },
        }
    }

    pub fn meet(&self, x: &GroupVal, y: &GroupVal) -> GroupVal {
        self.neg(&self.join(&self.neg(x), &self.neg(y)))
    }

    /// Deterministic bounded sample, used by sampled validation.
    pub fn sample(&self, rng: &mut impl Rng, scale: i64) -> GroupVal {
        match self {
            LGroupKind::Integers => GroupVal::Int(rng.gen_range(-scale..=scale)),
            LGroupKind::PosRationals => {
                let n = rng.gen_range(1..=scale);
                let d = rng.gen_range(1..=scale);
                GroupVal::PosRat(crate::rat::q(n, d))
            }
            LGroupKind::Product(ks) => {
                GroupVal::Tuple(ks.iter().map(|k| k.sample(rng, scale)).collect())
            }
            LGroupKind::Lex(a, b) => {
                GroupVal::Tuple(vec![a.sample(rng, scale), b.sample(rng, scale)])
            }
        }
    }
}

/// A lattice-ordered abelian group with a designated strong unit value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitalLGroup {
    kind: LGroupKind,
    unit: GroupVal,
}

impl UnitalLGroup {
    pub fn integers(unit: i64) -> Result<Self> {
        if unit < 1 {
            return Err(Error::Construction(format!(
                "unit of Z must be a positive integer, got {unit}"
            )));
        }
        Ok(UnitalLGroup {
            kind: LGroupKind::Integers,
            unit: GroupVal::Int(unit),
        })
    }

    /// (Q_{>0}, *). Its designated unit is the identity 1; on its own this is
    /// not a strong unit, but inside a lexicographic product with a totally
    /// ordered first component the composite unit is strong.
    pub fn pos_rationals() -> Self {
        UnitalLGroup {
            kind: LGroupKind::PosRationals,
            unit: GroupVal::PosRat(Q::one()),
        }
    }

    pub fn product(factors: Vec<UnitalLGroup>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Construction("empty product group".into()));
        }
        if factors
            .iter()
            .any(|f| matches!(f.kind, LGroupKind::Lex(..)))
        {
            return Err(Error::Construction(
                "lex components inside direct products are not supported".into(),
            ));
        }
        let kind = LGroupKind::Product(factors.iter().map(|f| f.kind.clone()).collect());
        let unit = GroupVal::Tuple(factors.iter().map(|f| f.unit.clone()).collect());
        Ok(UnitalLGroup { kind, unit })
    }

    /// Lexicographic product of depth two. The first component must be
    /// totally ordered, otherwise the lex order is not a lattice order. The
    /// composite unit is (unit of first, identity of second).
    pub fn lex(first: UnitalLGroup, second: UnitalLGroup) -> Result<Self> {
        if !first.kind.is_totally_ordered() {
            return Err(Error::Construction(
                "lex product requires a totally ordered first component".into(),
            ));
        }
        if matches!(first.kind, LGroupKind::Lex(..)) || matches!(second.kind, LGroupKind::Lex(..)) {
            return Err(Error::Construction(
                "lex products deeper than two levels are not supported".into(),
            ));
        }
        let unit = GroupVal::Tuple(vec![first.unit.clone(), second.kind.zero()]);
        Ok(UnitalLGroup {
            kind: LGroupKind::Lex(Box::new(first.kind), Box::new(second.kind)),
            unit,
        })
    }

    pub fn kind(&self) -> &LGroupKind {
        &self.kind
    }

    pub fn unit(&self) -> &GroupVal {
        &self.unit
    }

    pub fn zero(&self) -> GroupVal {
        self.kind.zero()
    }

    pub fn contains(&self, v: &GroupVal) -> bool {
        self.kind.check_shape(v)
    }

    pub fn add(&self, x: &GroupVal, y: &GroupVal) -> GroupVal {
        self.kind.add(x, y)
    }

    pub fn neg(&self, x: &GroupVal) -> GroupVal {
        self.kind.neg(x)
    }

    pub fn sub(&self, x: &GroupVal, y: &GroupVal) -> GroupVal {
        self.kind.sub(x, y)
    }

    pub fn scalar(&self, n: i64, x: &GroupVal) -> GroupVal {
        self.kind.scalar(n, x)
    }

    pub fn leq(&self, x: &GroupVal, y: &GroupVal) -> bool {
        self.kind.leq(x, y)
    }

    pub fn join(&self, x: &GroupVal, y: &GroupVal) -> GroupVal {
        self.kind.join(x, y)
    }

    pub fn meet(&self, x: &GroupVal, y: &GroupVal) -> GroupVal {
        self.kind.meet(x, y)
    }

    /// a \/ 0.
    pub fn pos_part(&self, x: &GroupVal) -> GroupVal {
        self.kind.join(x, &self.zero())
    }

    /// (-a) \/ 0.
    pub fn neg_part(&self, x: &GroupVal) -> GroupVal {
        self.kind.join(&self.kind.neg(x), &self.zero())
    }

    pub fn in_positive_cone(&self, v: &GroupVal) -> bool {
        self.leq(&self.zero(), v)
    }

    pub fn is_totally_ordered(&self) -> bool {
        self.kind.is_totally_ordered()
    }

    /// Least n in 1..=cap with v <= n*unit, if any. Evidence for the strong
    /// unit law on sampled values.
    pub fn strong_unit_bound(&self, v: &GroupVal, cap: i64) -> Option<i64> {
        (1..=cap).find(|&n| self.leq(v, &self.scalar(n, &self.unit)))
    }

    /// Sample a value in the interval [0, unit] by clamping a bounded sample.
    pub fn sample_in_interval(&self, rng: &mut impl Rng, scale: i64) -> GroupVal {
        let v = self.kind.sample(rng, scale);
        self.meet(&self.pos_part(&v), &self.unit)
    }

    /// Group descriptor syntax: `Z(u=3)`, `Qpos`, `lex(Z(u=1), Qpos)`,
    /// `prod(Z(u=1), Z(u=1))`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut p = DescParser {
            src: s,
            pos: 0,
        };
        let g = p.parse_group()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::MalformedTerm(format!(
                "trailing input in group descriptor at byte {}",
                p.pos
            )));
        }
        Ok(g)
    }

    pub fn render(&self) -> String {
        fn go(k: &LGroupKind, unit: Option<&GroupVal>) -> String {
            match (k, unit) {
                (LGroupKind::Integers, Some(GroupVal::Int(u))) => format!("Z(u={u})"),
                (LGroupKind::Integers, None) => "Z(u=1)".into(),
                (LGroupKind::PosRationals, _) => "Qpos".into(),
                (LGroupKind::Product(ks), unit) => {
                    let parts: Vec<String> = match unit {
                        Some(GroupVal::Tuple(us)) => ks
                            .iter()
                            .zip(us)
                            .map(|(k, u)| go(k, Some(u)))
                            .collect(),
                        _ => ks.iter().map(|k| go(k, None)).collect(),
                    };
                    format!("prod({})", parts.join(", "))
                }
                (LGroupKind::Lex(a, b), unit) => {
                    let (ua, _) = match unit {
                        Some(GroupVal::Tuple(us)) => (Some(&us[0]), Some(&us[1])),
                        _ => (None, None),
                    };
                    format!("lex({}, {})", go(a, ua), go(b, None))
                }
                _ => unreachable!("descriptor shape mismatch"),
            }
        }
        go(&self.kind, Some(&self.unit))
    }
}

struct DescParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> DescParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(Error::MalformedTerm(format!(
                "expected `{tok}` at byte {} of group descriptor",
                self.pos
            )))
        }
    }

    fn parse_group(&mut self) -> Result<UnitalLGroup> {
        self.skip_ws();
        if self.eat("lex(") {
            let a = self.parse_group()?;
            self.expect(",")?;
            let b = self.parse_group()?;
            self.expect(")")?;
            UnitalLGroup::lex(a, b)
        } else if self.eat("prod(") {
            let mut factors = vec![self.parse_group()?];
            while self.eat(",") {
                factors.push(self.parse_group()?);
            }
            self.expect(")")?;
            UnitalLGroup::product(factors)
        } else if self.eat("Qpos") {
            Ok(UnitalLGroup::pos_rationals())
        } else if self.eat("Z(u=") {
            let start = self.pos;
            while self.pos < self.src.len()
                && (self.src.as_bytes()[self.pos].is_ascii_digit()
                    || self.src.as_bytes()[self.pos] == b'-')
            {
                self.pos += 1;
            }
            let n: i64 = self.src[start..self.pos].parse().map_err(|_| {
                Error::MalformedTerm("expected an integer unit in Z(u=...)".into())
            })?;
            self.expect(")")?;
            UnitalLGroup::integers(n)
        } else if self.eat("Z") {
            UnitalLGroup::integers(1)
        } else {
            Err(Error::MalformedTerm(format!(
                "unrecognized group descriptor at byte {}",
                self.pos
            )))
        }
    }
}

/// Parse a rendered value against a descriptor shape, e.g. `7`, `3/4`,
/// `(1, 3/4)`.
pub fn parse_group_val(kind: &LGroupKind, s: &str) -> Result<GroupVal> {
    fn inner(kind: &LGroupKind, s: &str) -> Option<GroupVal> {
        let s = s.trim();
        match kind {
            LGroupKind::Integers => s.parse::<i64>().ok().map(GroupVal::Int),
            LGroupKind::PosRationals => {
                let r = parse_q(s)?;
                if r.is_positive() {
                    Some(GroupVal::PosRat(r))
                } else {
                    None
                }
            }
            LGroupKind::Product(ks) => {
                let body = s.strip_prefix('(')?.strip_suffix(')')?;
                let parts = split_top_level(body);
                if parts.len() != ks.len() {
                    return None;
                }
                let vs: Option<Vec<_>> =
                    ks.iter().zip(&parts).map(|(k, p)| inner(k, p)).collect();
                Some(GroupVal::Tuple(vs?))
            }
            LGroupKind::Lex(a, b) => {
                let body = s.strip_prefix('(')?.strip_suffix(')')?;
                let parts = split_top_level(body);
                if parts.len() != 2 {
                    return None;
                }
                Some(GroupVal::Tuple(vec![inner(a, &parts[0])?, inner(b, &parts[1])?]))
            }
        }
    }
    inner(kind, s).ok_or_else(|| Error::MalformedTerm(format!("bad group value `{s}`")))
}

fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(c),
        }
    }
    out.push(cur);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::q;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn lexzq() -> UnitalLGroup {
        UnitalLGroup::lex(UnitalLGroup::integers(1).unwrap(), UnitalLGroup::pos_rationals())
            .unwrap()
    }

    #[test]
    fn descriptor_round_trip() {
        for s in ["Z(u=3)", "Qpos", "lex(Z(u=1), Qpos)", "prod(Z(u=1), Z(u=1))"] {
            let g = UnitalLGroup::parse(s).unwrap();
            assert_eq!(g.render(), s);
        }
        assert!(UnitalLGroup::parse("Z(u=0)").is_err());
        assert!(UnitalLGroup::parse("lex(Qpos, Z(u=1)) extra").is_err());
        assert!(UnitalLGroup::parse("lex(lex(Z(u=1), Qpos), Qpos)").is_err());
    }

    #[test]
    fn lex_unit_is_strong() {
        let g = lexzq();
        assert_eq!(
            g.unit(),
            &GroupVal::Tuple(vec![GroupVal::Int(1), GroupVal::PosRat(q(1, 1))])
        );
        let v = GroupVal::Tuple(vec![GroupVal::Int(5), GroupVal::PosRat(q(100, 1))]);
        assert_eq!(g.strong_unit_bound(&v, 100), Some(6));
    }

    #[test]
    fn lex_lattice_ops() {
        let g = lexzq();
        let a = GroupVal::Tuple(vec![GroupVal::Int(0), GroupVal::PosRat(q(3, 1))]);
        let b = GroupVal::Tuple(vec![GroupVal::Int(1), GroupVal::PosRat(q(1, 2))]);
        assert!(g.leq(&a, &b));
        assert_eq!(g.join(&a, &b), b);
        assert_eq!(g.meet(&a, &b), a);
        // a \/ b = ((a - b) \/ 0) + b
        let alt = g.add(&g.pos_part(&g.sub(&a, &b)), &b);
        assert_eq!(g.join(&a, &b), alt);
    }

    #[test]
    fn pos_neg_parts() {
        let z = UnitalLGroup::integers(3).unwrap();
        let v = GroupVal::Int(-2);
        assert_eq!(z.pos_part(&v), GroupVal::Int(0));
        assert_eq!(z.neg_part(&v), GroupVal::Int(2));
        // a = a+ - a-
        assert_eq!(z.sub(&z.pos_part(&v), &z.neg_part(&v)), v);
    }

    #[test]
    fn interval_sampling_stays_inside() {
        let g = lexzq();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let v = g.sample_in_interval(&mut rng, 12);
            assert!(g.leq(&g.zero(), &v) && g.leq(&v, g.unit()));
        }
    }

    #[test]
    fn parse_values() {
        let g = lexzq();
        let v = parse_group_val(g.kind(), "(1, 3/4)").unwrap();
        assert_eq!(
            v,
            GroupVal::Tuple(vec![GroupVal::Int(1), GroupVal::PosRat(q(3, 4))])
        );
        assert!(parse_group_val(g.kind(), "(1, -3/4)").is_err());
    }
}
