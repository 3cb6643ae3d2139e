//! Ideals with cached reduced Groebner bases, membership and radical tests,
//! elimination-based intersection, and a combinatorial dimension oracle.

use crate::groebner::{normal_form, reduced_groebner, GbBudget};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, RingSpec};
use crate::{Error, Result};
use std::sync::OnceLock;

/// A polynomial ideal given by generators, carrying the order and budget
/// under which its reduced Groebner basis is computed on first use.
#[derive(Debug)]
pub struct Ideal {
    spec: RingSpec,
    gens: Vec<Polynomial>,
    order: MonomialOrder,
    budget: GbBudget,
    gb: OnceLock<std::result::Result<Vec<Polynomial>, Error>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(v) = self.gb.get() {
            let _ = gb.set(v.clone());
        }
        Ideal {
            spec: self.spec,
            gens: self.gens.clone(),
            order: self.order.clone(),
            budget: self.budget.clone(),
            gb,
        }
    }
}

impl Ideal {
    pub fn new(
        spec: RingSpec,
        gens: Vec<Polynomial>,
        order: MonomialOrder,
        budget: GbBudget,
    ) -> Result<Self> {
        if order.nvars() != spec.varcount() {
            return Err(Error::InvalidInput(
                "monomial order and ring disagree on variable count".into(),
            ));
        }
        for g in &gens {
            if g.spec() != spec {
                return Err(Error::InvalidInput(
                    "generator does not belong to the ideal's ring".into(),
                ));
            }
        }
        Ok(Ideal {
            spec,
            gens,
            order,
            budget,
            gb: OnceLock::new(),
        })
    }

    /// Ideal under the ring's default graded order and the default budget.
    pub fn with_defaults(spec: RingSpec, gens: Vec<Polynomial>) -> Result<Self> {
        let order = spec.default_order();
        Ideal::new(spec, gens, order, GbBudget::default())
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn budget(&self) -> &GbBudget {
        &self.budget
    }

    /// The reduced Groebner basis, computed once and cached.
    pub fn groebner(&self) -> Result<&[Polynomial]> {
        self.gb
            .get_or_init(|| reduced_groebner(&self.gens, &self.order, &self.budget))
            .as_deref()
            .map_err(Clone::clone)
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.groebner()?;
        Ok(gb.len() == 1 && gb[0].is_constant() && !gb[0].is_zero())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.groebner()?.is_empty())
    }

    /// Membership test: `f` lies in the ideal iff its normal form vanishes.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.spec() != self.spec {
            return Err(Error::InvalidInput(
                "membership query crosses rings".into(),
            ));
        }
        let gb = self.groebner()?;
        Ok(normal_form(f, gb, &self.order)?.is_zero())
    }

    /// Smallest `k <= k_max` with `f^k` in the ideal, if any.
    ///
    /// Powers are taken modulo the ideal: each step reduces `f` times the
    /// previous remainder, so intermediate polynomials stay small.
    pub fn power_membership(&self, f: &Polynomial, k_max: u32) -> Result<Option<u32>> {
        if f.spec() != self.spec {
            return Err(Error::InvalidInput(
                "membership query crosses rings".into(),
            ));
        }
        if k_max == 0 {
            return Err(Error::InvalidInput("k_max must be at least 1".into()));
        }
        let gb = self.groebner()?;
        let mut r = normal_form(f, gb, &self.order)?;
        for k in 1..=k_max {
            if r.is_zero() {
                return Ok(Some(k));
            }
            if k < k_max {
                r = normal_form(&f.mul(&r), gb, &self.order)?;
            }
        }
        Ok(None)
    }

    /// Whether some power of `f` lies in the ideal, decided without finding
    /// the exponent: adjoin an auxiliary variable y and test whether
    /// `1 - y*f` together with the generators spans the unit ideal.
    pub fn radical_membership(&self, f: &Polynomial) -> Result<bool> {
        if f.spec() != self.spec {
            return Err(Error::InvalidInput(
                "membership query crosses rings".into(),
            ));
        }
        let ext = self.spec.with_aux(self.spec.aux + 1);
        let y = Polynomial::aux(ext, self.spec.aux)?;
        let mut gens: Vec<Polynomial> = Vec::with_capacity(self.gens.len() + 1);
        for g in &self.gens {
            gens.push(g.embed(ext)?);
        }
        gens.push(Polynomial::one(ext).sub(&y.mul(&f.embed(ext)?)));
        let order = ext.default_order();
        let gb = reduced_groebner(&gens, &order, &self.budget)?;
        Ok(gb.len() == 1 && gb[0].is_constant() && !gb[0].is_zero())
    }

    /// Intersection via a tag variable: eliminate t from t*I + (1-t)*J.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        if other.spec != self.spec {
            return Err(Error::InvalidInput(
                "intersection crosses rings".into(),
            ));
        }
        let ext = self.spec.with_aux(self.spec.aux + 1);
        let tag_index = ext.aux_var(self.spec.aux)?;
        let t = Polynomial::aux(ext, self.spec.aux)?;
        let one_minus_t = Polynomial::one(ext).sub(&t);
        let mut gens: Vec<Polynomial> = Vec::new();
        for g in &self.gens {
            gens.push(t.mul(&g.embed(ext)?));
        }
        for g in &other.gens {
            gens.push(one_minus_t.mul(&g.embed(ext)?));
        }
        let elim = MonomialOrder::elimination(ext.varcount(), &[tag_index]);
        let gb = reduced_groebner(&gens, &elim, &self.budget)?;
        let mut meet: Vec<Polynomial> = Vec::new();
        for g in gb {
            let tag_free = g.terms().all(|(m, _)| m.exps()[tag_index] == 0);
            if tag_free {
                meet.push(g.project(self.spec)?);
            }
        }
        Ideal::new(self.spec, meet, self.order.clone(), self.budget.clone())
    }

    /// Equality of ideals under this ideal's order: reduced bases coincide.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if other.spec != self.spec {
            return Err(Error::InvalidInput("comparison crosses rings".into()));
        }
        let mine = self.groebner()?;
        if other.order == self.order {
            return Ok(mine == other.groebner()?);
        }
        let theirs = reduced_groebner(&other.gens, &self.order, &self.budget)?;
        Ok(mine == theirs)
    }

    /// Minimal monomial generators of the initial ideal under `order`.
    pub fn initial_ideal(&self, order: &MonomialOrder) -> Result<Vec<Monomial>> {
        let gb = if *order == self.order {
            self.groebner()?.to_vec()
        } else {
            reduced_groebner(&self.gens, order, &self.budget)?
        };
        // Leading monomials of a reduced basis are already minimal under
        // divisibility.
        Ok(gb
            .iter()
            .map(|g| {
                g.leading_term(order)
                    .map(|(m, _)| m.clone())
                    .expect("reduced basis has no zero element")
            })
            .collect())
    }

    /// Height via the initial ideal: codimension is invariant under passing
    /// to leading terms, and for monomial ideals it is combinatorial.
    pub fn height_oracle(&self) -> Result<u32> {
        if self.is_unit()? {
            return Err(Error::UnitIdeal);
        }
        let lms = self.initial_ideal(&self.order.clone())?;
        let dim = monomial_dimension(&lms, self.spec.varcount());
        Ok(self.spec.varcount() as u32 - dim as u32)
    }
}

/// Krull dimension of the quotient by a monomial ideal: the largest number
/// of variables that can be kept while no generator's support survives
/// inside the kept set. Equivalently `varcount` minus a minimum vertex
/// cover of the supports. Returns -1 for the unit ideal (empty variety)
/// and `varcount` for the zero ideal.
pub fn monomial_dimension(mingens: &[Monomial], varcount: usize) -> i64 {
    if mingens.iter().any(|m| m.is_one()) {
        return -1;
    }
    let mut supports: Vec<Vec<usize>> = mingens.iter().map(|m| m.support()).collect();
    supports.sort_by_key(|s| s.len());
    supports.dedup();
    // Only inclusion-minimal supports constrain the cover.
    let mut minimal: Vec<Vec<usize>> = Vec::new();
    for s in supports {
        if !minimal
            .iter()
            .any(|t| t.iter().all(|v| s.binary_search(v).is_ok()))
        {
            minimal.push(s);
        }
    }
    varcount as i64 - min_hitting_set(&minimal) as i64
}

/// Exact minimum hitting set by branch and bound. Branching picks the
/// smallest unhit set; the bound counts greedily chosen pairwise disjoint
/// sets, each of which needs its own cover element.
fn min_hitting_set(sets: &[Vec<usize>]) -> usize {
    fn disjoint_bound(sets: &[Vec<usize>]) -> usize {
        let mut used: Vec<usize> = Vec::new();
        let mut count = 0;
        for s in sets {
            if s.iter().all(|v| !used.contains(v)) {
                count += 1;
                used.extend_from_slice(s);
            }
        }
        count
    }

    fn greedy_cover(sets: &[Vec<usize>]) -> usize {
        let mut remaining: Vec<&Vec<usize>> = sets.iter().collect();
        let mut count = 0;
        while !remaining.is_empty() {
            let mut freq: std::collections::BTreeMap<usize, usize> = Default::default();
            for s in &remaining {
                for &v in *s {
                    *freq.entry(v).or_insert(0) += 1;
                }
            }
            let (&best_var, _) = freq.iter().max_by_key(|(_, c)| **c).unwrap();
            remaining.retain(|s| !s.contains(&best_var));
            count += 1;
        }
        count
    }

    fn branch(sets: &[Vec<usize>], chosen: usize, best: &mut usize) {
        if sets.is_empty() {
            *best = (*best).min(chosen);
            return;
        }
        if chosen + disjoint_bound(sets) >= *best {
            return;
        }
        let pivot = sets.iter().min_by_key(|s| s.len()).unwrap();
        for &v in pivot {
            let rest: Vec<Vec<usize>> = sets
                .iter()
                .filter(|s| !s.contains(&v))
                .cloned()
                .collect();
            branch(&rest, chosen + 1, best);
        }
    }

    if sets.is_empty() {
        return 0;
    }
    let mut best = greedy_cover(sets);
    branch(sets, 0, &mut best);
    best
}
