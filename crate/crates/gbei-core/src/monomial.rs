//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

/// A monomial: an exponent vector with a cached total degree.
///
/// The derived `Ord` is a fixed storage order (used for `BTreeMap` keys and
/// other deterministic bookkeeping); it is *not* the active term order.
/// All term-order comparisons go through [`MonomialOrder::cmp`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Box<[u32]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    /// The monomial `1` in a ring with `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    /// The single variable with the given index.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial::new(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.degree <= other.degree
            && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime_with(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum OrderKind {
    Lex,
    DegRevLex,
    /// Block elimination order: graded comparison on the first `first_len`
    /// entries of the precedence list, ties broken the same way on the rest.
    Block { first_len: usize },
}

/// A term order on monomials.
///
/// `precedence` lists variable indices from most to least significant. The
/// default ring order has precedence `x[1][1] > x[1][2] > ...` (ascending
/// variable index) and kind `DegRevLex`, which compares total degree first
/// and breaks ties at the earliest precedence position with a differing
/// exponent, larger exponent winning. With the row-major precedence this
/// makes the diagonal product `x[k][i]*x[l][j]` lead every 2-minor
/// `[k,l|i,j]`, so binomial edge ideals get squarefree leading terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            precedence: (0..nvars).collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: (0..nvars).collect(),
        }
    }

    /// An elimination order making every variable in `eliminated` larger than
    /// everything else: any leading monomial free of the eliminated block
    /// certifies the whole polynomial is free of it.
    pub fn elimination(nvars: usize, eliminated: &[usize]) -> Self {
        let mut precedence: Vec<usize> = eliminated.to_vec();
        precedence.extend((0..nvars).filter(|v| !eliminated.contains(v)));
        assert_eq!(precedence.len(), nvars, "eliminated variables must be distinct and in range");
        MonomialOrder {
            kind: OrderKind::Block {
                first_len: eliminated.len(),
            },
            precedence,
        }
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn is_lex(&self) -> bool {
        self.kind == OrderKind::Lex
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars());
        debug_assert_eq!(b.nvars(), self.nvars());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.precedence {
                    match a.exps[v].cmp(&b.exps[v]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => graded_cmp_on(&self.precedence, a, b),
            OrderKind::Block { first_len } => {
                let (hi, lo) = self.precedence.split_at(first_len);
                graded_cmp_on(hi, a, b).then_with(|| graded_cmp_on(lo, a, b))
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Graded comparison restricted to the listed variables: compare restricted
/// total degree, then scan the variables in significance order; the first
/// difference decides, larger exponent winning.
fn graded_cmp_on(vars: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = vars.iter().map(|&v| a.exps()[v]).sum();
    let db: u32 = vars.iter().map(|&v| b.exps()[v]).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for &v in vars {
        match a.exps()[v].cmp(&b.exps()[v]) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}
