//! Validated homomorphisms and the functorial maps between BL-algebras and
//! unital lattice-ordered groups: the decomposition of a positive group
//! element into a good sequence over the unit interval, the induced group
//! isomorphism, the unit-interval embedding of an algebra into its own
//! group, the map on formal differences induced by an algebra morphism, and
//! exhaustive hom-set enumeration for finite algebras.

use crate::algebra::{Algebra, AlgebraData, Elt, Value};
use crate::chang::GroupElt;
use crate::error::{Error, Result};
use crate::goodseq::GoodSeq;
use crate::lgroup::{GroupVal, UnitalLGroup};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

/// How a morphism was checked at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validation {
    Exhaustive { cases: u64 },
    Sampled { seed: u64, cases: u64 },
}

#[derive(Debug, Clone)]
enum MapImpl {
    Table(BTreeMap<Value, Value>),
    Identity,
    /// Inclusion of a subalgebra into its parent (values coincide).
    Inclusion,
    /// `h(x) = g(~~x)` for a table morphism g defined on the MV-center.
    DoubleNegExtend { inner: BTreeMap<Value, Value> },
    /// The case split from the interval of lex(Z, Qpos) onto a chain with
    /// two-element center: first coordinate 0 maps to 0, coordinate 1 to 1.
    GammaLexCollapse,
}

/// A homomorphism of BL-algebras, validated eagerly at construction.
#[derive(Debug, Clone)]
pub struct BlMorphism {
    dom: Algebra,
    cod: Algebra,
    map: MapImpl,
    cert: Validation,
}

impl BlMorphism {
    pub fn dom(&self) -> &Algebra {
        &self.dom
    }

    pub fn cod(&self) -> &Algebra {
        &self.cod
    }

    pub fn certificate(&self) -> &Validation {
        &self.cert
    }

    pub fn apply_value(&self, v: &Value) -> Result<Value> {
        match &self.map {
            MapImpl::Table(t) => t
                .get(v)
                .cloned()
                .ok_or_else(|| Error::NotInCarrier(self.dom.render_value(v))),
            MapImpl::Identity | MapImpl::Inclusion => Ok(v.clone()),
            MapImpl::DoubleNegExtend { inner } => {
                let nn = self.dom.v_neg(&self.dom.v_neg(v));
                inner
                    .get(&nn)
                    .cloned()
                    .ok_or_else(|| Error::NotInCarrier(self.dom.render_value(&nn)))
            }
            MapImpl::GammaLexCollapse => match v {
                Value::Group(GroupVal::Tuple(parts)) => match parts.first() {
                    Some(GroupVal::Int(0)) => Ok(self.cod.v_bottom()),
                    Some(GroupVal::Int(1)) => Ok(self.cod.v_top()),
                    _ => Err(Error::NotInCarrier(self.dom.render_value(v))),
                },
                _ => Err(Error::NotInCarrier(self.dom.render_value(v))),
            },
        }
    }

    pub fn apply(&self, e: &Elt) -> Result<Elt> {
        self.dom.check_tag(e)?;
        self.cod.elt(self.apply_value(e.value())?)
    }

    pub fn identity(alg: &Algebra) -> Result<BlMorphism> {
        let m = BlMorphism {
            dom: alg.clone(),
            cod: alg.clone(),
            map: MapImpl::Identity,
            cert: Validation::Exhaustive { cases: 0 },
        };
        m.validate(7)
    }

    /// Inclusion of a subalgebra (e.g. the MV-center) into its parent.
    pub fn inclusion(sub: &Algebra, parent: &Algebra) -> Result<BlMorphism> {
        let AlgebraData::Subalgebra { parent: p, .. } = sub.data() else {
            return Err(Error::InvalidMorphism(
                "inclusion needs an explicit subalgebra as domain".into(),
            ));
        };
        if p != parent {
            return Err(Error::InvalidMorphism(
                "subalgebra does not sit inside the given parent".into(),
            ));
        }
        let m = BlMorphism {
            dom: sub.clone(),
            cod: parent.clone(),
            map: MapImpl::Inclusion,
            cert: Validation::Exhaustive { cases: 0 },
        };
        m.validate(7)
    }

    /// Total map given by element pairs over a finite domain.
    pub fn from_table(dom: &Algebra, cod: &Algebra, pairs: Vec<(Elt, Elt)>) -> Result<BlMorphism> {
        let carrier = dom.carrier().ok_or_else(|| {
            Error::UnsupportedShape("table morphisms need a finite domain".into())
        })?;
        let mut table = BTreeMap::new();
        for (x, y) in pairs {
            dom.check_tag(&x)?;
            cod.check_tag(&y)?;
            table.insert(x.into_value(), y.into_value());
        }
        for v in carrier {
            if !table.contains_key(v) {
                return Err(Error::InvalidMorphism(format!(
                    "table is not total: {} unmapped",
                    dom.render_value(v)
                )));
            }
        }
        let m = BlMorphism {
            dom: dom.clone(),
            cod: cod.clone(),
            map: MapImpl::Table(table),
            cert: Validation::Exhaustive { cases: 0 },
        };
        m.validate(7)
    }

    /// Extend a morphism g on the MV-center of `dom` to all of `dom` via
    /// `h(x) = g(~~x)`; the unique such extension.
    pub fn double_neg_extend(
        dom: &Algebra,
        center_map: &BlMorphism,
        seed: u64,
    ) -> Result<BlMorphism> {
        let center = dom.mv_center()?;
        if center_map.dom != center {
            return Err(Error::InvalidMorphism(
                "inner morphism is not defined on the MV-center of the domain".into(),
            ));
        }
        let MapImpl::Table(inner) = &center_map.map else {
            return Err(Error::InvalidMorphism(
                "center morphism must be a table".into(),
            ));
        };
        let m = BlMorphism {
            dom: dom.clone(),
            cod: center_map.cod.clone(),
            map: MapImpl::DoubleNegExtend {
                inner: inner.clone(),
            },
            cert: Validation::Exhaustive { cases: 0 },
        };
        m.validate(seed)
    }

    /// The collapse from the interval of lex(Z(u=1), Qpos) onto the rational
    /// product chain: (0,x) -> 0 and (1,x) -> 1. Validated on samples.
    pub fn gamma_lex_collapse(gamma: &Algebra, cod: &Algebra, seed: u64) -> Result<BlMorphism> {
        match gamma.data() {
            AlgebraData::GammaInterval { .. } => {}
            _ => {
                return Err(Error::InvalidMorphism(
                    "domain must be a group interval".into(),
                ))
            }
        }
        let m = BlMorphism {
            dom: gamma.clone(),
            cod: cod.clone(),
            map: MapImpl::GammaLexCollapse,
            cert: Validation::Exhaustive { cases: 0 },
        };
        m.validate(seed)
    }

    /// Check preservation of 0, 1, * and -> ; exhaustive over finite
    /// domains, otherwise on 500 seeded samples. The certificate records
    /// which mode ran.
    fn validate(mut self, seed: u64) -> Result<BlMorphism> {
        let bad = |what: &str, x: &Value, y: Option<&Value>| {
            Err(Error::InvalidMorphism(match y {
                Some(y) => format!(
                    "{what} not preserved at ({}, {})",
                    self.dom.render_value(x),
                    self.dom.render_value(y)
                ),
                None => format!("{what} not preserved at {}", self.dom.render_value(x)),
            }))
        };
        let f0 = self.apply_value(&self.dom.v_bottom())?;
        if f0 != self.cod.v_bottom() {
            return bad("bottom", &self.dom.v_bottom(), None);
        }
        let f1 = self.apply_value(&self.dom.v_top())?;
        if f1 != self.cod.v_top() {
            return bad("top", &self.dom.v_top(), None);
        }

        let mut cases = 0u64;
        let mut check_pair = |m: &BlMorphism, x: &Value, y: &Value| -> Result<()> {
            cases += 1;
            let fx = m.apply_value(x)?;
            let fy = m.apply_value(y)?;
            if m.apply_value(&m.dom.v_otimes(x, y))? != m.cod.v_otimes(&fx, &fy) {
                return Err(Error::InvalidMorphism(format!(
                    "product not preserved at ({}, {})",
                    m.dom.render_value(x),
                    m.dom.render_value(y)
                )));
            }
            if m.apply_value(&m.dom.v_imp(x, y))? != m.cod.v_imp(&fx, &fy) {
                return Err(Error::InvalidMorphism(format!(
                    "residuum not preserved at ({}, {})",
                    m.dom.render_value(x),
                    m.dom.render_value(y)
                )));
            }
            Ok(())
        };

        if let Some(carrier) = self.dom.carrier() {
            for x in carrier {
                for y in carrier {
                    check_pair(&self, x, y)?;
                }
            }
            self.cert = Validation::Exhaustive { cases };
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..500 {
                let x = self.dom.sample_value(&mut rng, 64);
                let y = self.dom.sample_value(&mut rng, 64);
                check_pair(&self, &x, &y)?;
            }
            self.cert = Validation::Sampled { seed, cases };
        }
        Ok(self)
    }

    /// Rendered assignment table for finite domains, in carrier order.
    pub fn render_table(&self) -> Result<Vec<(String, String)>> {
        let carrier = self
            .dom
            .carrier()
            .ok_or_else(|| Error::UnsupportedShape("infinite domain".into()))?;
        carrier
            .iter()
            .map(|v| {
                Ok((
                    self.dom.render_value(v),
                    self.cod.render_value(&self.apply_value(v)?),
                ))
            })
            .collect()
    }
}

/// Map a good sequence entrywise through a morphism; images of good
/// sequences are good because the addition is defined from the preserved
/// operations.
pub fn map_goodseq(f: &BlMorphism, s: &GoodSeq) -> Result<GoodSeq> {
    s.check_alg(&f.dom)?;
    let vals = s
        .entries()
        .iter()
        .map(|v| f.apply_value(v))
        .collect::<Result<Vec<_>>>()?;
    GoodSeq::from_values(&f.cod, vals)
}

/// The induced map on formal differences: `[a,b] -> [f(a), f(b)]`.
pub fn xi_map(f: &BlMorphism, g: &GroupElt) -> Result<GroupElt> {
    GroupElt::new(
        &f.cod,
        map_goodseq(f, g.pos_seq())?,
        map_goodseq(f, g.neg_seq())?,
    )
}

/// The unit-interval embedding of an algebra into its own group:
/// `a -> [(~~a),(0)]`, landing in `[0, u]`.
pub fn eta(alg: &Algebra, a: &Elt) -> Result<GroupElt> {
    let nn = alg.neg(&alg.neg(a)?)?;
    GroupElt::from_elt(alg, &nn)
}

/// Truncated product on classes in the interval `[0, u]` of the group of
/// formal differences: `x * y = u - ((2u - x - y) /\ u)`.
pub fn gamma_class_otimes(alg: &Algebra, x: &GroupElt, y: &GroupElt) -> Result<GroupElt> {
    let u = GroupElt::unit(alg);
    let two_u = GroupElt::unit_multiple(alg, 2);
    let s = two_u.sub(alg, x)?.sub(alg, y)?;
    u.sub(alg, &crate::chang::group_meet(alg, &s, &u)?)
}

/// Truncated residuum on classes: `x -> y = (u - x + y) /\ u`.
pub fn gamma_class_imp(alg: &Algebra, x: &GroupElt, y: &GroupElt) -> Result<GroupElt> {
    let u = GroupElt::unit(alg);
    let s = u.sub(alg, x)?.add(alg, y)?;
    crate::chang::group_meet(alg, &s, &u)
}

/// Decompose a positive group element into the unique good sequence over
/// the unit interval summing to it, by the greedy step `a1 = a /\ u`,
/// then recursing on `(a - u) \/ 0`.
pub fn good_seq_of_positive(gamma: &Algebra, a: &GroupVal) -> Result<GoodSeq> {
    let AlgebraData::GammaInterval { group } = gamma.data() else {
        return Err(Error::UnsupportedShape(
            "decomposition needs a group interval algebra".into(),
        ));
    };
    if !group.contains(a) || !group.in_positive_cone(a) {
        return Err(Error::NotInCarrier(format!(
            "{a} is not in the positive cone"
        )));
    }
    let u = group.unit();
    let zero = group.zero();
    let mut entries = Vec::new();
    let mut v = a.clone();
    let mut guard = 0usize;
    while v != zero {
        entries.push(Value::Group(group.meet(&v, u)));
        v = group.pos_part(&group.sub(&v, u));
        guard += 1;
        if guard > 100_000 {
            return Err(Error::TooLarge(
                "greedy decomposition did not terminate; unit is not strong here".into(),
            ));
        }
    }
    // self-check: the entries sum back to a in the group
    let mut sum = zero;
    for e in &entries {
        let Value::Group(g) = e else { unreachable!() };
        sum = group.add(&sum, g);
    }
    if sum != *a {
        return Err(Error::Construction(format!(
            "greedy decomposition does not sum back to {a}"
        )));
    }
    GoodSeq::from_values(gamma, entries)
}

/// The canonical isomorphism from a unital group onto the group of formal
/// differences over its unit interval: `a -> [g(a+), g(a-)]`.
pub fn psi(gamma: &Algebra, a: &GroupVal) -> Result<GroupElt> {
    let AlgebraData::GammaInterval { group } = gamma.data() else {
        return Err(Error::UnsupportedShape(
            "psi needs a group interval algebra".into(),
        ));
    };
    let pos = good_seq_of_positive(gamma, &group.pos_part(a))?;
    let neg = good_seq_of_positive(gamma, &group.neg_part(a))?;
    GroupElt::new(gamma, pos, neg)
}

/// Exhaustively enumerate all homomorphisms between two finite algebras.
/// Results are deterministic: lexicographic in the assignment table.
pub fn enumerate_homs(a: &Algebra, b: &Algebra, cap: u64) -> Result<Vec<BlMorphism>> {
    let ca = a
        .carrier()
        .ok_or_else(|| Error::UnsupportedShape("hom enumeration needs finite algebras".into()))?
        .to_vec();
    let cb = b
        .carrier()
        .ok_or_else(|| Error::UnsupportedShape("hom enumeration needs finite algebras".into()))?
        .to_vec();
    let total = (cb.len() as u128).checked_pow(ca.len() as u32);
    match total {
        Some(t) if t <= cap as u128 => {}
        _ => {
            return Err(Error::TooLarge(format!(
                "{}^{} candidate maps exceed the cap {cap}",
                cb.len(),
                ca.len()
            )))
        }
    }

    let n = ca.len();
    let idx_of = |v: &Value| ca.iter().position(|w| w == v).expect("closed carrier");
    let ot: Vec<Vec<usize>> = ca
        .iter()
        .map(|x| ca.iter().map(|y| idx_of(&a.v_otimes(x, y))).collect())
        .collect();
    let im: Vec<Vec<usize>> = ca
        .iter()
        .map(|x| ca.iter().map(|y| idx_of(&a.v_imp(x, y))).collect())
        .collect();
    let bot_a = idx_of(&a.v_bottom());
    let top_a = idx_of(&a.v_top());
    let bot_b = cb.iter().position(|w| *w == b.v_bottom()).expect("bottom");
    let top_b = cb.iter().position(|w| *w == b.v_top()).expect("top");

    let mut results = Vec::new();
    let mut f = vec![usize::MAX; n];

    fn consistent(
        i: usize,
        f: &[usize],
        ot: &[Vec<usize>],
        im: &[Vec<usize>],
        b: &Algebra,
        cb: &[Value],
    ) -> bool {
        for j in 0..=i {
            for (x, y) in [(i, j), (j, i)] {
                for (tab, is_ot) in [(ot, true), (im, false)] {
                    let p = tab[x][y];
                    if p <= i {
                        let img = if is_ot {
                            b.v_otimes(&cb[f[x]], &cb[f[y]])
                        } else {
                            b.v_imp(&cb[f[x]], &cb[f[y]])
                        };
                        if img != cb[f[p]] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn full_check(
        f: &[usize],
        ot: &[Vec<usize>],
        im: &[Vec<usize>],
        b: &Algebra,
        cb: &[Value],
    ) -> bool {
        let n = f.len();
        for x in 0..n {
            for y in 0..n {
                if b.v_otimes(&cb[f[x]], &cb[f[y]]) != cb[f[ot[x][y]]] {
                    return false;
                }
                if b.v_imp(&cb[f[x]], &cb[f[y]]) != cb[f[im[x][y]]] {
                    return false;
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        i: usize,
        f: &mut Vec<usize>,
        ot: &[Vec<usize>],
        im: &[Vec<usize>],
        a: &Algebra,
        b: &Algebra,
        ca: &[Value],
        cb: &[Value],
        pinned: &[(usize, usize)],
        results: &mut Vec<BlMorphism>,
    ) {
        let n = f.len();
        if i == n {
            if full_check(f, ot, im, b, cb) {
                let pairs = ca
                    .iter()
                    .enumerate()
                    .map(|(k, v)| {
                        (
                            a.elt(v.clone()).expect("carrier"),
                            b.elt(cb[f[k]].clone()).expect("carrier"),
                        )
                    })
                    .collect();
                if let Ok(m) = BlMorphism::from_table(a, b, pairs) {
                    results.push(m);
                }
            }
            return;
        }
        let forced = pinned.iter().find(|(k, _)| *k == i).map(|(_, v)| *v);
        for cand in 0..cb.len() {
            if let Some(v) = forced {
                if cand != v {
                    continue;
                }
            }
            f[i] = cand;
            if consistent(i, f, ot, im, b, cb) {
                search(i + 1, f, ot, im, a, b, ca, cb, pinned, results);
            }
        }
        f[i] = usize::MAX;
    }

    search(
        0,
        &mut f,
        &ot,
        &im,
        a,
        b,
        &ca,
        &cb,
        &[(bot_a, bot_b), (top_a, top_b)],
        &mut results,
    );
    Ok(results)
}

/// A morphism of unital lattice-ordered groups, validated on samples.
#[derive(Debug, Clone)]
pub struct LMorphism {
    dom: UnitalLGroup,
    cod: UnitalLGroup,
    map: LMap,
    cert: Validation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum LMap {
    Identity,
    /// On a lex pair, keep the first coordinate and collapse the second to
    /// the identity of its group.
    LexCollapseSecond,
}

impl LMorphism {
    pub fn identity(g: &UnitalLGroup) -> Result<LMorphism> {
        LMorphism {
            dom: g.clone(),
            cod: g.clone(),
            map: LMap::Identity,
            cert: Validation::Exhaustive { cases: 0 },
        }
        .validate(11)
    }

    pub fn lex_collapse_second(g: &UnitalLGroup) -> Result<LMorphism> {
        match g.kind() {
            crate::lgroup::LGroupKind::Lex(..) => LMorphism {
                dom: g.clone(),
                cod: g.clone(),
                map: LMap::LexCollapseSecond,
                cert: Validation::Exhaustive { cases: 0 },
            }
            .validate(11),
            _ => Err(Error::InvalidMorphism(
                "second-coordinate collapse needs a lex product".into(),
            )),
        }
    }

    pub fn apply(&self, v: &GroupVal) -> GroupVal {
        match &self.map {
            LMap::Identity => v.clone(),
            LMap::LexCollapseSecond => match v {
                GroupVal::Tuple(parts) => {
                    let second_zero = match self.dom.kind() {
                        crate::lgroup::LGroupKind::Lex(_, b) => b.zero(),
                        _ => unreachable!("validated at construction"),
                    };
                    GroupVal::Tuple(vec![parts[0].clone(), second_zero])
                }
                _ => v.clone(),
            },
        }
    }

    pub fn certificate(&self) -> &Validation {
        &self.cert
    }

    /// Distinctness witness: some value where two morphisms disagree.
    pub fn differs_from(&self, other: &LMorphism, samples: usize, seed: u64) -> Option<GroupVal> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let v = self.dom.kind().sample(&mut rng, 16);
            if self.apply(&v) != other.apply(&v) {
                return Some(v);
            }
        }
        None
    }

    /// Sampled check: additive, preserves join and meet, maps unit to unit.
    fn validate(mut self, seed: u64) -> Result<LMorphism> {
        if self.apply(self.dom.unit()) != *self.cod.unit() {
            return Err(Error::InvalidMorphism("unit not preserved".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut cases = 0u64;
        for _ in 0..500 {
            let x = self.dom.kind().sample(&mut rng, 16);
            let y = self.dom.kind().sample(&mut rng, 16);
            cases += 1;
            if self.apply(&self.dom.add(&x, &y)) != self.cod.add(&self.apply(&x), &self.apply(&y))
            {
                return Err(Error::InvalidMorphism("addition not preserved".into()));
            }
            if self.apply(&self.dom.join(&x, &y))
                != self.cod.join(&self.apply(&x), &self.apply(&y))
            {
                return Err(Error::InvalidMorphism("join not preserved".into()));
            }
            if self.apply(&self.dom.meet(&x, &y))
                != self.cod.meet(&self.apply(&x), &self.apply(&y))
            {
                return Err(Error::InvalidMorphism("meet not preserved".into()));
            }
        }
        self.cert = Validation::Sampled { seed, cases };
        Ok(self)
    }
}
