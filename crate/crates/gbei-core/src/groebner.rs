//! Buchberger's algorithm with the normal selection strategy, the product
//! and chain criteria, and deterministic work budgeting.

use crate::field::Coeff;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::time::Instant;

/// Resource budget for Groebner-basis computations.
///
/// `max_term_ops` caps a deterministic work counter (term-merge operations),
/// so a capped run fails at the same point on every execution. `max_seconds`
/// is an optional wall-clock cap; it is off by default because it is not
/// deterministic.
#[derive(Clone, Debug)]
pub struct GbBudget {
    pub max_term_ops: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget {
            max_term_ops: Some(400_000_000),
            max_seconds: None,
        }
    }
}

impl GbBudget {
    pub fn unlimited() -> Self {
        GbBudget {
            max_term_ops: None,
            max_seconds: None,
        }
    }
}

struct Work {
    term_ops: u64,
    started: Instant,
}

impl Work {
    fn new() -> Self {
        Work {
            term_ops: 0,
            started: Instant::now(),
        }
    }

    fn charge(&mut self, ops: u64, budget: &GbBudget) -> Result<()> {
        self.term_ops += ops;
        if let Some(cap) = budget.max_term_ops {
            if self.term_ops > cap {
                return Err(Error::ResourceCap(format!(
                    "term operation budget of {cap} exhausted"
                )));
            }
        }
        if let Some(secs) = budget.max_seconds {
            if self.started.elapsed().as_secs_f64() > secs {
                return Err(Error::ResourceCap(format!(
                    "wall clock budget of {secs}s exhausted"
                )));
            }
        }
        Ok(())
    }
}

/// A polynomial as a term list, strictly descending under the active order.
type Terms = Vec<(Monomial, Coeff)>;

fn to_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    t.sort_by(|(a, _), (b, _)| order.cmp(b, a));
    t
}

fn to_polynomial(spec: crate::poly::RingSpec, terms: &Terms) -> Polynomial {
    let mut acc = Polynomial::zero(spec);
    for (m, c) in terms {
        acc = acc.add(&Polynomial::monomial_term(spec, m.clone(), c.clone()));
    }
    acc
}

fn make_monic(terms: &mut Terms) {
    if let Some((_, lc)) = terms.first() {
        if !lc.is_one() {
            let inv = lc.inv().expect("nonzero leading coefficient");
            for (_, c) in terms.iter_mut() {
                *c = c.mul(&inv);
            }
        }
    }
}

/// `a + c * u * b` as a sorted merge; both inputs sorted descending.
fn add_scaled(
    a: &Terms,
    c: &Coeff,
    u: &Monomial,
    b: &Terms,
    order: &MonomialOrder,
    work: &mut Work,
    budget: &GbBudget,
) -> Result<Terms> {
    work.charge((a.len() + b.len()) as u64, budget)?;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut scaled_j: Option<(Monomial, Coeff)> = b.get(0).map(|(m, cf)| (u.mul(m), c.mul(cf)));
    while i < a.len() {
        match &scaled_j {
            None => {
                out.extend_from_slice(&a[i..]);
                i = a.len();
            }
            Some((bm, bc)) => match order.cmp(&a[i].0, bm) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((bm.clone(), bc.clone()));
                    j += 1;
                    scaled_j = b.get(j).map(|(m, cf)| (u.mul(m), c.mul(cf)));
                }
                std::cmp::Ordering::Equal => {
                    let s = a[i].1.add(bc);
                    if !s.is_zero() {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                    scaled_j = b.get(j).map(|(m, cf)| (u.mul(m), c.mul(cf)));
                }
            },
        }
    }
    while let Some((bm, bc)) = scaled_j {
        out.push((bm, bc));
        j += 1;
        scaled_j = b.get(j).map(|(m, cf)| (u.mul(m), c.mul(cf)));
    }
    Ok(out)
}

/// Full normal form of `p` against `basis`, skipping index `skip` if given.
/// Divisor choice is the first basis element (in slice order) whose leading
/// monomial divides the current head, which keeps reduction deterministic.
fn reduce_terms(
    mut p: Terms,
    basis: &[Terms],
    skip: Option<usize>,
    order: &MonomialOrder,
    work: &mut Work,
    budget: &GbBudget,
) -> Result<Terms> {
    let mut out: Terms = Vec::new();
    'heads: while let Some((lm, lc)) = p.first().cloned() {
        for (idx, g) in basis.iter().enumerate() {
            if Some(idx) == skip {
                continue;
            }
            let (glm, glc) = match g.first() {
                Some(t) => t,
                None => continue,
            };
            if glm.divides(&lm) {
                let u = glm.quotient_of(&lm).expect("divisibility checked");
                let c = lc.div(glc).expect("nonzero leading coefficient").neg();
                p = add_scaled(&p, &c, &u, g, order, work, budget)?;
                continue 'heads;
            }
        }
        out.push(p.remove(0));
    }
    Ok(out)
}

fn validate_inputs(polys: &[&Polynomial], order: &MonomialOrder) -> Result<()> {
    for p in polys {
        if p.spec().varcount() != order.nvars() {
            return Err(Error::InvalidInput(
                "polynomial ring and monomial order disagree on variable count".into(),
            ));
        }
    }
    if let Some(first) = polys.first() {
        for p in polys {
            if p.spec() != first.spec() {
                return Err(Error::InvalidInput(
                    "polynomials come from different rings".into(),
                ));
            }
        }
    }
    Ok(())
}

/// The remainder of `f` on division by `basis` under `order`.
///
/// The result contains no monomial divisible by any basis leading monomial,
/// and `f - normal_form(f)` lies in the ideal generated by `basis`.
pub fn normal_form(
    f: &Polynomial,
    basis: &[Polynomial],
    order: &MonomialOrder,
) -> Result<Polynomial> {
    let mut refs: Vec<&Polynomial> = vec![f];
    refs.extend(basis.iter());
    validate_inputs(&refs, order)?;
    let divisors: Vec<Terms> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_terms(g, order))
        .collect();
    let mut work = Work::new();
    let budget = GbBudget::unlimited();
    let r = reduce_terms(
        to_terms(f, order),
        &divisors,
        None,
        order,
        &mut work,
        &budget,
    )?;
    Ok(to_polynomial(f.spec(), &r))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger with normal selection: among the queued S-pairs, take the one
/// with the smallest lcm degree, then the order-smallest lcm, then indices.
fn select_pair(pairs: &[Pair], order: &MonomialOrder) -> usize {
    let mut best = 0;
    for idx in 1..pairs.len() {
        let a = &pairs[idx];
        let b = &pairs[best];
        let better = match a.lcm.degree().cmp(&b.lcm.degree()) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => match order.cmp(&a.lcm, &b.lcm) {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Greater => false,
                std::cmp::Ordering::Equal => (a.i, a.j) < (b.i, b.j),
            },
        };
        if better {
            best = idx;
        }
    }
    best
}

/// The reduced Groebner basis of the ideal generated by `gens`.
///
/// Output elements are monic, fully interreduced, and sorted ascending by
/// leading monomial, so equal ideals yield byte-identical bases.
pub fn reduced_groebner(
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &GbBudget,
) -> Result<Vec<Polynomial>> {
    let refs: Vec<&Polynomial> = gens.iter().collect();
    validate_inputs(&refs, order)?;
    let spec = match gens.first() {
        Some(p) => p.spec(),
        None => return Ok(Vec::new()),
    };
    let mut work = Work::new();

    let mut basis: Vec<Terms> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let mut t = to_terms(g, order);
        make_monic(&mut t);
        basis.push(t);
    }
    if basis.is_empty() {
        return Ok(Vec::new());
    }

    let mut pairs: Vec<Pair> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push(Pair {
                i,
                j,
                lcm: basis[i][0].0.lcm(&basis[j][0].0),
            });
        }
    }
    let mut processed: BTreeSet<(usize, usize)> = BTreeSet::new();

    while !pairs.is_empty() {
        work.charge(1, budget)?;
        let idx = select_pair(&pairs, order);
        let Pair { i, j, lcm } = pairs.remove(idx);
        processed.insert((i, j));

        let lmi = &basis[i][0].0;
        let lmj = &basis[j][0].0;
        // Product criterion: coprime leading monomials give a trivial S-pair.
        if lmi.is_coprime_with(lmj) {
            continue;
        }
        // Chain criterion: some third element divides the lcm and both of its
        // pairs with i and j were already treated.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k][0].0.divides(&lcm)
                && processed.contains(&(k.min(i), k.max(i)))
                && processed.contains(&(k.min(j), k.max(j)))
        });
        if chain {
            continue;
        }

        let ui = lmi.quotient_of(&lcm).expect("lcm divisible by lm");
        let uj = lmj.quotient_of(&lcm).expect("lcm divisible by lm");
        let one = Coeff::one(spec.characteristic);
        // Both elements are monic, so the S-polynomial is u_i*f_i - u_j*f_j.
        let s = add_scaled(
            &scale_by_monomial(&basis[i], &ui),
            &one.neg(),
            &uj,
            &basis[j],
            order,
            &mut work,
            budget,
        )?;
        let mut r = reduce_terms(s, &basis, None, order, &mut work, budget)?;
        if r.is_empty() {
            continue;
        }
        make_monic(&mut r);
        let t = basis.len();
        for k in 0..t {
            pairs.push(Pair {
                i: k,
                j: t,
                lcm: basis[k][0].0.lcm(&r[0].0),
            });
        }
        basis.push(r);
    }

    // Unit ideal collapses to [1].
    if basis.iter().any(|g| g[0].0.is_one()) {
        return Ok(vec![Polynomial::one(spec)]);
    }

    // Minimal basis: ascending by leading monomial, drop anything whose lm is
    // divisible by the lm of an element kept before it.
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    let mut kept: Vec<Terms> = Vec::new();
    for g in basis {
        if !kept.iter().any(|h| h[0].0.divides(&g[0].0)) {
            kept.push(g);
        }
    }

    // Interreduce tails. Leading monomials are pairwise indivisible, so one
    // pass leaves every element fully reduced against the others.
    for idx in 0..kept.len() {
        let g = kept[idx].clone();
        let lm = g[0].0.clone();
        let mut r = reduce_terms(g, &kept, Some(idx), order, &mut work, budget)?;
        if r.first().map(|(m, _)| m != &lm).unwrap_or(true) {
            return Err(Error::Internal(
                "leading monomial changed during interreduction".into(),
            ));
        }
        make_monic(&mut r);
        kept[idx] = r;
    }

    Ok(kept.iter().map(|t| to_polynomial(spec, t)).collect())
}

fn scale_by_monomial(terms: &Terms, u: &Monomial) -> Terms {
    terms.iter().map(|(m, c)| (u.mul(m), c.clone())).collect()
}

/// Check the Buchberger criterion directly: every S-polynomial of `basis`
/// reduces to zero. Intended as a test oracle; no pair-skipping shortcuts.
pub fn is_groebner_basis(
    basis: &[Polynomial],
    order: &MonomialOrder,
    budget: &GbBudget,
) -> Result<bool> {
    let refs: Vec<&Polynomial> = basis.iter().collect();
    validate_inputs(&refs, order)?;
    if basis.is_empty() {
        return Ok(true);
    }
    let elems: Vec<Terms> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_terms(g, order))
        .collect();
    let mut work = Work::new();
    for i in 0..elems.len() {
        for j in (i + 1)..elems.len() {
            let lmi = &elems[i][0].0;
            let lmj = &elems[j][0].0;
            let lci = &elems[i][0].1;
            let lcj = &elems[j][0].1;
            let lcm = lmi.lcm(lmj);
            let ui = lmi.quotient_of(&lcm).unwrap();
            let uj = lmj.quotient_of(&lcm).unwrap();
            let c = lci.div(lcj).unwrap().neg();
            let s = add_scaled(
                &scale_by_monomial(&elems[i], &ui),
                &c,
                &uj,
                &elems[j],
                order,
                &mut work,
                budget,
            )?;
            let r = reduce_terms(s, &elems, None, order, &mut work, budget)?;
            if !r.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RingSpec;

    fn nf(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        let order = f.spec().default_order();
        normal_form(f, basis, &order).unwrap()
    }

    #[test]
    fn single_division_step() {
        // Dividing the diagonal monomial by the 2-minor leaves the
        // antidiagonal: x11*x22 = 1*(x11*x22 - x12*x21) + x12*x21.
        let s = RingSpec::new(2, 2, 0).unwrap();
        let f = Polynomial::parse(s, "x[1][1]*x[2][2]").unwrap();
        let g = Polynomial::fij(s, 1, 2).unwrap();
        let expect = Polynomial::parse(s, "x[1][2]*x[2][1]").unwrap();
        assert_eq!(nf(&f, &[g]), expect);
    }

    #[test]
    fn normal_form_trivia() {
        let s = RingSpec::new(2, 3, 0).unwrap();
        let f = Polynomial::fij(s, 1, 2).unwrap();
        let zero = Polynomial::zero(s);
        assert_eq!(nf(&zero, &[f.clone()]), zero);
        assert!(nf(&f, &[f.clone()]).is_zero());
        let combo = f.mul(&Polynomial::var(s, 2, 3).unwrap()).add(&f);
        assert!(nf(&combo, &[f]).is_zero());
    }

    #[test]
    fn coprime_generators_are_a_basis() {
        // Two minors on disjoint column pairs have coprime leading terms.
        let s = RingSpec::new(2, 4, 0).unwrap();
        let f12 = Polynomial::fij(s, 1, 2).unwrap();
        let f34 = Polynomial::fij(s, 3, 4).unwrap();
        let order = s.default_order();
        let gb = reduced_groebner(&[f12.clone(), f34.clone()], &order, &GbBudget::default())
            .unwrap();
        assert_eq!(gb.len(), 2);
        assert!(gb.contains(&f12) && gb.contains(&f34));
        assert!(is_groebner_basis(&gb, &order, &GbBudget::default()).unwrap());
    }

    #[test]
    fn triangle_minors_are_a_basis() {
        // All three 2x2 minors of a 2x3 matrix form a reduced basis already.
        let s = RingSpec::new(2, 3, 0).unwrap();
        let gens = vec![
            Polynomial::fij(s, 1, 2).unwrap(),
            Polynomial::fij(s, 1, 3).unwrap(),
            Polynomial::fij(s, 2, 3).unwrap(),
        ];
        let order = s.default_order();
        let gb = reduced_groebner(&gens, &order, &GbBudget::default()).unwrap();
        assert_eq!(gb.len(), 3);
        for g in &gens {
            assert!(gb.contains(g));
        }
        // Sorted ascending by leading monomial: f23 < f13 < f12.
        assert_eq!(gb[0], gens[2]);
        assert_eq!(gb[1], gens[1]);
        assert_eq!(gb[2], gens[0]);
    }

    #[test]
    fn cherry_needs_one_cubic() {
        // Edges {1,2} and {1,3}: the S-pair contributes x21*f23.
        let s = RingSpec::new(2, 3, 0).unwrap();
        let f12 = Polynomial::fij(s, 1, 2).unwrap();
        let f13 = Polynomial::fij(s, 1, 3).unwrap();
        let order = s.default_order();
        assert!(!is_groebner_basis(&[f12.clone(), f13.clone()], &order, &GbBudget::default())
            .unwrap());
        let gb = reduced_groebner(&[f12, f13], &order, &GbBudget::default()).unwrap();
        assert_eq!(gb.len(), 3);
        let cubic = Polynomial::fij(s, 2, 3)
            .unwrap()
            .mul(&Polynomial::var(s, 2, 1).unwrap());
        assert!(gb.contains(&cubic));
        assert!(is_groebner_basis(&gb, &order, &GbBudget::default()).unwrap());
    }

    #[test]
    fn unit_ideal_collapses() {
        let s = RingSpec::new(2, 2, 0).unwrap();
        let f = Polynomial::fij(s, 1, 2).unwrap();
        let c = Polynomial::parse(s, "3").unwrap();
        let order = s.default_order();
        let gb = reduced_groebner(&[f, c], &order, &GbBudget::default()).unwrap();
        assert_eq!(gb, vec![Polynomial::one(s)]);
    }

    #[test]
    fn budget_cap_errors() {
        let s = RingSpec::new(2, 4, 0).unwrap();
        let gens: Vec<Polynomial> = [(1u32, 2u32), (2, 3), (3, 4), (1, 4), (1, 3)]
            .iter()
            .map(|&(i, j)| Polynomial::fij(s, i, j).unwrap())
            .collect();
        let order = s.default_order();
        let tiny = GbBudget {
            max_term_ops: Some(10),
            max_seconds: None,
        };
        match reduced_groebner(&gens, &order, &tiny) {
            Err(Error::ResourceCap(_)) => {}
            other => panic!("expected resource cap, got {other:?}"),
        }
    }

    #[test]
    fn determinism_across_permutations() {
        let s = RingSpec::new(2, 4, 0).unwrap();
        let mut gens: Vec<Polynomial> = [(1u32, 2u32), (2, 3), (3, 4), (1, 4)]
            .iter()
            .map(|&(i, j)| Polynomial::fij(s, i, j).unwrap())
            .collect();
        let order = s.default_order();
        let gb1 = reduced_groebner(&gens, &order, &GbBudget::default()).unwrap();
        gens.reverse();
        let gb2 = reduced_groebner(&gens, &order, &GbBudget::default()).unwrap();
        assert_eq!(gb1, gb2);
        assert!(is_groebner_basis(&gb1, &order, &GbBudget::default()).unwrap());
    }
}
