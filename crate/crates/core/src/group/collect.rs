//! Collection in class-2 groups of prime exponent.
//!
//! Elements are exponent vectors `(e_1, …, e_r)` over `Z/p` standing for the
//! normal word `g_1^{e_1} ⋯ g_r^{e_r}`. With every commutator `[g_i, g_j]`
//! central, moving `g_j^b` left past `g_i^a` (`i > j`) leaves `[g_i, g_j]^{ab}`
//! behind, which gives the closed product formula used by [`ClassTwoCollector::multiply`].

use super::{materialize, validate_table, Backend, Group, Limits};
use crate::error::{GroupError, Result};

/// `[g_later, g_earlier] = value`, with `later > earlier` and `value` an
/// exponent vector supported on central generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorRelation {
    pub later: usize,
    pub earlier: usize,
    pub value: Vec<u8>,
}

#[derive(Clone, Debug)]
pub struct ClassTwoCollector {
    prime: u8,
    rank: usize,
    relations: Vec<CommutatorRelation>,
}

impl ClassTwoCollector {
    pub fn new(prime: u8, rank: usize, relations: Vec<CommutatorRelation>) -> Result<Self> {
        if prime < 3 {
            return Err(GroupError::ConstructionInvalid(
                "class-2 collection formula needs an odd prime".into(),
            ));
        }
        let mut central = vec![true; rank];
        for rel in &relations {
            if rel.later <= rel.earlier || rel.later >= rank || rel.value.len() != rank {
                return Err(GroupError::ConstructionInvalid(format!(
                    "malformed commutator relation [{}, {}]",
                    rel.later, rel.earlier
                )));
            }
            if rel.value.iter().any(|&v| v != 0) {
                central[rel.later] = false;
                central[rel.earlier] = false;
            }
        }
        for rel in &relations {
            for (k, &v) in rel.value.iter().enumerate() {
                if v != 0 && !central[k] {
                    return Err(GroupError::ConstructionInvalid(format!(
                        "commutator [{}, {}] is not central",
                        rel.later, rel.earlier
                    )));
                }
            }
        }
        Ok(ClassTwoCollector {
            prime,
            rank,
            relations,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn multiply(&self, u: &[u8], v: &[u8]) -> Vec<u8> {
        let p = self.prime as u32;
        let mut w: Vec<u32> = u.iter().zip(v).map(|(&a, &b)| a as u32 + b as u32).collect();
        for rel in &self.relations {
            let coeff = u[rel.later] as u32 * v[rel.earlier] as u32;
            if coeff == 0 {
                continue;
            }
            for (k, &c) in rel.value.iter().enumerate() {
                w[k] += coeff * c as u32;
            }
        }
        w.into_iter().map(|x| (x % p) as u8).collect()
    }

    pub fn unit(&self, i: usize) -> Vec<u8> {
        let mut v = vec![0u8; self.rank];
        v[i] = 1;
        v
    }

    /// Enumerates the group as a table backend, checking associativity.
    pub fn build(&self, names: Vec<String>, limits: Limits) -> Result<Group> {
        if names.len() != self.rank {
            return Err(GroupError::ConstructionInvalid(
                "one name per generator required".into(),
            ));
        }
        let gens: Vec<Vec<u8>> = (0..self.rank).map(|i| self.unit(i)).collect();
        let (elements, table, gen_idx) = materialize(
            vec![0u8; self.rank],
            &gens,
            |x, y| self.multiply(x, y),
            limits.enumeration_cap,
        )?;
        validate_table(elements.len(), &table)
            .map_err(|e| GroupError::ConstructionInvalid(e.to_string()))?;
        Ok(Group::assemble(
            elements.len(),
            table,
            gen_idx,
            names,
            Backend::Table,
            limits,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_group_of_order_27() {
        // [y, x] = z
        let c = ClassTwoCollector::new(
            3,
            3,
            vec![CommutatorRelation {
                later: 1,
                earlier: 0,
                value: vec![0, 0, 1],
            }],
        )
        .unwrap();
        let g = c
            .build(vec!["x".into(), "y".into(), "z".into()], Limits::default())
            .unwrap();
        assert_eq!(g.order(), 27);
        let (x, y, z) = (g.generators()[0], g.generators()[1], g.generators()[2]);
        assert_eq!(g.commutator(y, x), z);
        assert!(g.elements().all(|e| g.pow(e, 3) == g.identity()));
    }

    #[test]
    fn rejects_non_central_commutator() {
        let bad = ClassTwoCollector::new(
            3,
            3,
            vec![
                CommutatorRelation {
                    later: 1,
                    earlier: 0,
                    value: vec![0, 0, 1],
                },
                CommutatorRelation {
                    later: 2,
                    earlier: 0,
                    value: vec![0, 1, 0],
                },
            ],
        );
        assert!(bad.is_err());
    }
}
