//! Axiom validation: every defining law a BL-algebra must satisfy, checked
//! exhaustively on finite carriers and on seeded samples otherwise. Failures
//! carry a witness tuple so corrupted tables can be diagnosed.

use super::{Algebra, Value};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Largest number of tuples a single check will enumerate exhaustively.
const EXHAUSTIVE_CAP: u64 = 700_000;

#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub id: &'static str,
    pub description: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
    pub cases: u64,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub algebra: String,
    pub exhaustive: bool,
    pub seed: u64,
    pub checks: Vec<AxiomCheck>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "algebra {} ({}; seed {})",
            self.algebra,
            if self.exhaustive { "exhaustive" } else { "sampled" },
            self.seed
        )?;
        for c in &self.checks {
            if c.pass {
                writeln!(f, "  PASS {:<28} {} cases", c.id, c.cases)?;
            } else {
                writeln!(
                    f,
                    "  FAIL {:<28} witness {}",
                    c.id,
                    c.witness.as_deref().unwrap_or("-")
                )?;
            }
        }
        Ok(())
    }
}

struct Runner<'a> {
    alg: &'a Algebra,
    budget: usize,
    seed: u64,
    exhaustive: bool,
    checks: Vec<AxiomCheck>,
}

impl<'a> Runner<'a> {
    fn run<F>(&mut self, id: &'static str, description: &'static str, arity: usize, prop: F)
    where
        F: Fn(&Algebra, &[Value]) -> bool,
    {
        let mut cases = 0u64;
        let mut witness: Option<Vec<Value>> = None;

        if let Some(carrier) = self.alg.carrier() {
            let total = (carrier.len() as u64).pow(arity as u32);
            if total <= EXHAUSTIVE_CAP {
                let mut idx = vec![0usize; arity];
                'outer: loop {
                    let tuple: Vec<Value> =
                        idx.iter().map(|&i| carrier[i].clone()).collect();
                    cases += 1;
                    if !prop(self.alg, &tuple) {
                        witness = Some(tuple);
                        break;
                    }
                    for slot in (0..arity).rev() {
                        idx[slot] += 1;
                        if idx[slot] < carrier.len() {
                            continue 'outer;
                        }
                        idx[slot] = 0;
                        if slot == 0 {
                            break 'outer;
                        }
                    }
                    if arity == 0 {
                        break;
                    }
                }
                self.push(id, description, cases, witness);
                return;
            }
        }

        self.exhaustive = false;
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ fnv1a(id.as_bytes()));
        for _ in 0..self.budget {
            let tuple: Vec<Value> = (0..arity)
                .map(|_| self.alg.sample_value(&mut rng, 64))
                .collect();
            cases += 1;
            if !prop(self.alg, &tuple) {
                witness = Some(tuple);
                break;
            }
        }
        self.push(id, description, cases, witness);
    }

    fn push(
        &mut self,
        id: &'static str,
        description: &'static str,
        cases: u64,
        witness: Option<Vec<Value>>,
    ) {
        let witness = witness.map(|w| {
            let parts: Vec<String> = w.iter().map(|v| self.alg.render_value(v)).collect();
            format!("({})", parts.join(", "))
        });
        self.checks.push(AxiomCheck {
            id,
            description,
            pass: witness.is_none(),
            witness,
            cases,
        });
    }
}

/// Seed-splitting hash so each check draws an independent sample stream.
pub(crate) fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// Check every defining law. Exhaustive when the carrier is finite and small
/// enough, otherwise `budget` seeded samples per law.
pub fn validate_bl_axioms(alg: &Algebra, budget: usize, seed: u64) -> ValidationReport {
    let mut r = Runner {
        alg,
        budget,
        seed,
        exhaustive: true,
        checks: Vec::new(),
    };
    let top = alg.v_top();
    let bot = alg.v_bottom();

    r.run("otimes-commutative", "x*y = y*x", 2, |a, t| {
        a.v_otimes(&t[0], &t[1]) == a.v_otimes(&t[1], &t[0])
    });
    r.run("otimes-associative", "(x*y)*z = x*(y*z)", 3, |a, t| {
        a.v_otimes(&a.v_otimes(&t[0], &t[1]), &t[2])
            == a.v_otimes(&t[0], &a.v_otimes(&t[1], &t[2]))
    });
    {
        let top = top.clone();
        r.run("otimes-unit", "x*1 = x", 1, move |a, t| {
            a.v_otimes(&t[0], &top) == t[0]
        });
    }
    {
        let top = top.clone();
        r.run("imp-reflexive", "x->x = 1", 1, move |a, t| {
            a.v_imp(&t[0], &t[0]) == top
        });
    }
    r.run(
        "divisibility",
        "x*(x->y) = y*(y->x)",
        2,
        |a, t| a.v_otimes(&t[0], &a.v_imp(&t[0], &t[1])) == a.v_otimes(&t[1], &a.v_imp(&t[1], &t[0])),
    );
    r.run("curry", "x->(y->z) = (x*y)->z", 3, |a, t| {
        a.v_imp(&t[0], &a.v_imp(&t[1], &t[2])) == a.v_imp(&a.v_otimes(&t[0], &t[1]), &t[2])
    });
    r.run(
        "residuation",
        "x*y <= z iff x <= y->z",
        3,
        |a, t| a.v_leq(&a.v_otimes(&t[0], &t[1]), &t[2]) == a.v_leq(&t[0], &a.v_imp(&t[1], &t[2])),
    );
    {
        let top = top.clone();
        let bot = bot.clone();
        r.run("bounded-bottom", "0 <= x", 1, move |a, t| {
            a.v_imp(&bot, &t[0]) == top
        });
    }
    r.run(
        "prelinearity-ineq",
        "(x->y)->z <= ((y->x)->z)->z",
        3,
        |a, t| {
            let l = a.v_imp(&a.v_imp(&t[0], &t[1]), &t[2]);
            let rr = a.v_imp(&a.v_imp(&a.v_imp(&t[1], &t[0]), &t[2]), &t[2]);
            a.v_leq(&l, &rr)
        },
    );
    {
        let top = top.clone();
        r.run(
            "prelinearity-join",
            "(x->y) \\/ (y->x) = 1",
            2,
            move |a, t| a.v_join(&a.v_imp(&t[0], &t[1]), &a.v_imp(&t[1], &t[0])) == top,
        );
    }
    r.run(
        "meet-is-glb",
        "x /\\ y is the greatest lower bound",
        3,
        |a, t| {
            let m = a.v_meet(&t[0], &t[1]);
            a.v_leq(&m, &t[0])
                && a.v_leq(&m, &t[1])
                && (!(a.v_leq(&t[2], &t[0]) && a.v_leq(&t[2], &t[1])) || a.v_leq(&t[2], &m))
        },
    );
    r.run(
        "join-is-lub",
        "x \\/ y is the least upper bound",
        3,
        |a, t| {
            let j = a.v_join(&t[0], &t[1]);
            a.v_leq(&t[0], &j)
                && a.v_leq(&t[1], &j)
                && (!(a.v_leq(&t[0], &t[2]) && a.v_leq(&t[1], &t[2])) || a.v_leq(&j, &t[2]))
        },
    );

    // derived laws, grouped the way the library's test suites consume them
    {
        let top = top.clone();
        r.run(
            "order-matches-imp",
            "x <= y iff x->y = 1; x*y <= x /\\ y",
            2,
            move |a, t| {
                (a.v_leq(&t[0], &t[1]) == (a.v_imp(&t[0], &t[1]) == top))
                    && a.v_leq(&a.v_otimes(&t[0], &t[1]), &a.v_meet(&t[0], &t[1]))
            },
        );
    }
    r.run("exchange", "x->(y->z) = y->(x->z)", 3, |a, t| {
        a.v_imp(&t[0], &a.v_imp(&t[1], &t[2])) == a.v_imp(&t[1], &a.v_imp(&t[0], &t[2]))
    });
    r.run(
        "imp-antitone-monotone",
        "x <= y forces y->z <= x->z and z->x <= z->y",
        3,
        |a, t| {
            !a.v_leq(&t[0], &t[1])
                || (a.v_leq(&a.v_imp(&t[1], &t[2]), &a.v_imp(&t[0], &t[2]))
                    && a.v_leq(&a.v_imp(&t[2], &t[0]), &a.v_imp(&t[2], &t[1])))
        },
    );
    r.run(
        "adjunction-bounds",
        "x <= y->(x*y) and x*(x->y) <= y",
        2,
        |a, t| {
            a.v_leq(&t[0], &a.v_imp(&t[1], &a.v_otimes(&t[0], &t[1])))
                && a.v_leq(&a.v_otimes(&t[0], &a.v_imp(&t[0], &t[1])), &t[1])
        },
    );
    {
        let top = top.clone();
        r.run(
            "unit-imp-laws",
            "1->x = x; x->1 = 1; x <= y->x; x <= ~~x; ~~~x = ~x",
            2,
            move |a, t| {
                a.v_imp(&top, &t[0]) == t[0]
                    && a.v_imp(&t[0], &top) == top
                    && a.v_leq(&t[0], &a.v_imp(&t[1], &t[0]))
                    && a.v_leq(&t[0], &a.v_neg(&a.v_neg(&t[0])))
                    && a.v_neg(&a.v_neg(&a.v_neg(&t[0]))) == a.v_neg(&t[0])
            },
        );
    }
    {
        let bot = bot.clone();
        r.run(
            "neg-otimes",
            "x*~x = 0; x*y = 0 iff x <= ~y",
            2,
            move |a, t| {
                a.v_otimes(&t[0], &a.v_neg(&t[0])) == bot
                    && ((a.v_otimes(&t[0], &t[1]) == bot) == a.v_leq(&t[0], &a.v_neg(&t[1])))
            },
        );
    }
    r.run(
        "monotone-ops",
        "x <= y forces x*z <= y*z and ~y <= ~x",
        3,
        |a, t| {
            !a.v_leq(&t[0], &t[1])
                || (a.v_leq(&a.v_otimes(&t[0], &t[2]), &a.v_otimes(&t[1], &t[2]))
                    && a.v_leq(&a.v_neg(&t[1]), &a.v_neg(&t[0])))
        },
    );
    {
        let top = top.clone();
        let bot = bot.clone();
        r.run(
            "de-morgan-neg",
            "~(x*y) = x->~y; ~(x/\\y) = ~x\\/~y; ~(x\\/y) = ~x/\\~y; ~0 = 1; ~1 = 0",
            2,
            move |a, t| {
                a.v_neg(&a.v_otimes(&t[0], &t[1])) == a.v_imp(&t[0], &a.v_neg(&t[1]))
                    && a.v_neg(&a.v_meet(&t[0], &t[1]))
                        == a.v_join(&a.v_neg(&t[0]), &a.v_neg(&t[1]))
                    && a.v_neg(&a.v_join(&t[0], &t[1]))
                        == a.v_meet(&a.v_neg(&t[0]), &a.v_neg(&t[1]))
                    && a.v_neg(&bot) == top
                    && a.v_neg(&top) == bot
            },
        );
    }
    r.run(
        "double-neg-compat",
        "~~ commutes with ->, /\\, \\/ and *",
        2,
        |a, t| {
            let nn = |v: &Value| a.v_neg(&a.v_neg(v));
            nn(&a.v_imp(&t[0], &t[1])) == a.v_imp(&nn(&t[0]), &nn(&t[1]))
                && nn(&a.v_meet(&t[0], &t[1])) == a.v_meet(&nn(&t[0]), &nn(&t[1]))
                && nn(&a.v_join(&t[0], &t[1])) == a.v_join(&nn(&t[0]), &nn(&t[1]))
                && nn(&a.v_otimes(&t[0], &t[1])) == a.v_otimes(&nn(&t[0]), &nn(&t[1]))
        },
    );
    r.run(
        "otimes-distributes-lattice",
        "x*(y\\/z) = (x*y)\\/(x*z) and dually for /\\",
        3,
        |a, t| {
            a.v_otimes(&t[0], &a.v_join(&t[1], &t[2]))
                == a.v_join(&a.v_otimes(&t[0], &t[1]), &a.v_otimes(&t[0], &t[2]))
                && a.v_otimes(&t[0], &a.v_meet(&t[1], &t[2]))
                    == a.v_meet(&a.v_otimes(&t[0], &t[1]), &a.v_otimes(&t[0], &t[2]))
        },
    );
    r.run(
        "imp-distributes-lattice",
        "x->(y/\\z) = (x->y)/\\(x->z) and x->(y\\/z) = (x->y)\\/(x->z)",
        3,
        |a, t| {
            a.v_imp(&t[0], &a.v_meet(&t[1], &t[2]))
                == a.v_meet(&a.v_imp(&t[0], &t[1]), &a.v_imp(&t[0], &t[2]))
                && a.v_imp(&t[0], &a.v_join(&t[1], &t[2]))
                    == a.v_join(&a.v_imp(&t[0], &t[1]), &a.v_imp(&t[0], &t[2]))
        },
    );

    ValidationReport {
        algebra: alg.describe(),
        exhaustive: r.exhaustive,
        seed,
        checks: r.checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, FiniteTableData};

    #[test]
    fn lukasiewicz_4_chain_passes_exhaustively() {
        let a = Algebra::lukasiewicz_finite(4).unwrap();
        let r = validate_bl_axioms(&a, 0, 1);
        assert!(r.exhaustive);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn boolean_passes() {
        let r = validate_bl_axioms(&Algebra::boolean(), 0, 1);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn rational_chains_pass_sampled() {
        for a in [
            Algebra::lukasiewicz_rational(),
            Algebra::godel_rational(),
            Algebra::product_rational(),
        ] {
            let r = validate_bl_axioms(&a, 300, 42);
            assert!(!r.exhaustive);
            assert!(r.all_pass(), "{r}");
        }
    }

    fn l3_table() -> FiniteTableData {
        // 0 < h < 1 with the 3-element MV-chain structure
        FiniteTableData {
            names: vec!["0".into(), "h".into(), "1".into()],
            bottom: 0,
            top: 2,
            otimes: vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]],
            imp: vec![vec![2, 2, 2], vec![1, 2, 2], vec![0, 1, 2]],
        }
    }

    #[test]
    fn hand_rolled_l3_table_passes() {
        let a = Algebra::finite_table(l3_table()).unwrap();
        let r = validate_bl_axioms(&a, 0, 1);
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn every_single_cell_mutation_is_detected() {
        let base = l3_table();
        for row in 0..3 {
            for col in 0..3 {
                for alt in 0..3usize {
                    if alt == base.otimes[row][col] {
                        continue;
                    }
                    let mut data = base.clone();
                    data.otimes[row][col] = alt;
                    let a = Algebra::finite_table(data).unwrap();
                    let r = validate_bl_axioms(&a, 0, 1);
                    assert!(
                        !r.all_pass(),
                        "mutated otimes[{row}][{col}] := {alt} slipped through"
                    );
                    assert!(r.failures().all(|c| c.witness.is_some()));
                }
            }
        }
    }
}
