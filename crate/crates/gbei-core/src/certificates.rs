//! Small generator sets whose radical equals an edge-minor ideal, checked
//! by reduction: every witness generator must lie in the target, and a
//! power of every remaining target generator must lie in the witness ideal.

use crate::bei;
use crate::graph::SimpleGraph;
use crate::groebner::GbBudget;
use crate::ideal::Ideal;
use crate::poly::{Polynomial, RingSpec};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// What the witness ideal is measured against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertTarget {
    /// The edge-minor ideal of a graph.
    Gbei(SimpleGraph),
    /// An explicit generator list.
    Explicit(Vec<Polynomial>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub spec: RingSpec,
    pub target: CertTarget,
    pub witness: Vec<Polynomial>,
    /// Expected exponents for target generators outside the witness list.
    pub claims: Vec<(Polynomial, u32)>,
    pub source: String,
}

impl Certificate {
    /// Target generators in canonical order.
    pub fn target_generators(&self) -> Result<Vec<Polynomial>> {
        match &self.target {
            CertTarget::Explicit(gens) => Ok(gens.clone()),
            CertTarget::Gbei(g) => {
                let m = self.spec.m;
                let mut gens = Vec::new();
                for (i, j) in g.edges() {
                    for k in 1..=m {
                        for l in (k + 1)..=m {
                            gens.push(Polynomial::minor(self.spec, k, l, i, j)?);
                        }
                    }
                }
                Ok(gens)
            }
        }
    }

    pub fn target_ideal(&self, budget: &GbBudget) -> Result<Ideal> {
        let order = self.spec.default_order();
        Ideal::new(self.spec, self.target_generators()?, order, budget.clone())
    }

    pub fn witness_ideal(&self, budget: &GbBudget) -> Result<Ideal> {
        let order = self.spec.default_order();
        Ideal::new(self.spec, self.witness.clone(), order, budget.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub generator: String,
    /// None for generators the certificate leaves unclaimed.
    pub claimed: Option<u32>,
    /// Smallest exponent whose power landed in the witness ideal.
    pub found: Option<u32>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertReport {
    pub name: String,
    pub witness_in_target: bool,
    /// Witness generators that failed the containment check.
    pub witness_failures: Vec<String>,
    pub claims: Vec<ClaimOutcome>,
    pub pass: bool,
}

fn monic_key(p: &Polynomial, spec: &RingSpec) -> String {
    p.monic(&spec.default_order()).to_string()
}

/// Run the two-sided check: witness generators inside the target, powers of
/// the remaining target generators inside the witness ideal. Exponents are
/// searched from 1 upward; a claim passes only if the found exponent stays
/// at or below the claimed one.
pub fn verify(cert: &Certificate, k_max: u32, budget: &GbBudget) -> Result<CertReport> {
    if k_max == 0 {
        return Err(Error::InvalidInput("k_max must be positive".into()));
    }
    let spec = cert.spec;
    let order = spec.default_order();
    let target = cert.target_ideal(budget)?;
    let witness = cert.witness_ideal(budget)?;

    let mut witness_failures = Vec::new();
    for w in &cert.witness {
        if !target.contains(w)? {
            witness_failures.push(w.to_string());
        }
    }
    let witness_in_target = witness_failures.is_empty();

    let witness_keys: Vec<String> = cert.witness.iter().map(|w| monic_key(w, &spec)).collect();
    let target_gens = cert.target_generators()?;
    let mut claim_for: Vec<(String, u32)> = Vec::new();
    for (p, k) in &cert.claims {
        let key = monic_key(p, &spec);
        if !target_gens.iter().any(|g| monic_key(g, &spec) == key) {
            return Err(Error::InvalidInput(format!(
                "claimed polynomial {} is not a target generator",
                p.to_string_with(&order)
            )));
        }
        if claim_for.iter().any(|(existing, _)| *existing == key) {
            return Err(Error::InvalidInput(format!(
                "duplicate claim for {}",
                p.to_string_with(&order)
            )));
        }
        claim_for.push((key, *k));
    }

    let mut claims = Vec::new();
    let mut all_ok = true;
    for g in &target_gens {
        let key = monic_key(g, &spec);
        if witness_keys.contains(&key) {
            continue;
        }
        let claimed = claim_for
            .iter()
            .find(|(k, _)| *k == key)
            .map(|&(_, exp)| exp);
        let limit = claimed.map_or(k_max, |c| c.max(k_max));
        let found = witness.power_membership(g, limit)?;
        let ok = match claimed {
            Some(c) => found.is_some_and(|k| k <= c),
            None => found.is_some(),
        };
        all_ok &= ok;
        claims.push(ClaimOutcome {
            generator: g.to_string_with(&order),
            claimed,
            found,
            ok,
        });
    }

    Ok(CertReport {
        name: cert.name.clone(),
        witness_in_target,
        witness_failures,
        claims,
        pass: witness_in_target && all_ok,
    })
}

/// Compare the witness size against the arithmetical-rank upper bound the
/// bounds report derives for the same graph. `None` when the target is an
/// explicit generator list with no associated graph.
pub fn certificate_size_vs_bound(cert: &Certificate) -> Result<Option<bool>> {
    match &cert.target {
        CertTarget::Explicit(_) => Ok(None),
        CertTarget::Gbei(g) => {
            let report = bei::bounds_report(cert.spec.m, g, cert.spec.characteristic)?;
            Ok(Some(cert.witness.len() as u64 == report.bounds.ara.hi))
        }
    }
}

struct Builder {
    spec: RingSpec,
}

impl Builder {
    fn new(n: u32) -> Self {
        Builder {
            spec: RingSpec::new(2, n, 0).expect("valid ring"),
        }
    }

    fn f(&self, i: u32, j: u32) -> Polynomial {
        Polynomial::minor(self.spec, 1, 2, i, j).expect("valid minor")
    }

    fn fs(&self, i: u32, j: u32, k: u32, l: u32) -> Polynomial {
        self.f(i, j).add(&self.f(k, l))
    }
}

fn cert(
    name: &str,
    source: &str,
    spec: RingSpec,
    target: CertTarget,
    witness: Vec<Polynomial>,
    claims: Vec<(Polynomial, u32)>,
) -> Certificate {
    Certificate {
        name: name.into(),
        spec,
        target,
        witness,
        claims,
        source: source.into(),
    }
}

/// The built-in catalog. Every entry is a two-row certificate over the
/// rationals; claims list the expected exponent for each target generator
/// missing from the witness list.
pub fn builtin_catalog() -> Vec<Certificate> {
    let mut out = Vec::new();

    // 4-cycle: the edge-minor ideal plus the chord minor f[2,4] equals the
    // intersection of the primes at T = {} and T = {2,4}; four generators
    // cut it out up to radical.
    {
        let b = Builder::new(4);
        let target = CertTarget::Explicit(vec![
            b.f(1, 2),
            b.f(2, 3),
            b.f(3, 4),
            b.f(1, 4),
            b.f(2, 4),
        ]);
        out.push(cert(
            "c4-intersection",
            "intersection of the two cut-set primes of the 4-cycle",
            b.spec,
            target,
            vec![b.fs(1, 2, 3, 4), b.f(2, 3), b.f(1, 4), b.f(2, 4)],
            vec![(b.f(1, 2), 2), (b.f(3, 4), 2)],
        ));
    }

    // Triangle with one pendant edge: three equations.
    {
        let b = Builder::new(4);
        let g = SimpleGraph::new(4, &[(1, 2), (1, 3), (1, 4), (3, 4)]).unwrap();
        out.push(cert(
            "triangle-pendant-edge",
            "triangle with a pendant edge, the smallest almost-complete intersection that is set-theoretically cut out by ht equations",
            b.spec,
            CertTarget::Gbei(g),
            vec![b.fs(1, 2, 3, 4), b.f(1, 3), b.f(1, 4)],
            vec![(b.f(1, 2), 2), (b.f(3, 4), 2)],
        ));
    }

    // Diamond = edge joined to two isolated vertices: four equations.
    {
        let b = Builder::new(4);
        let g = SimpleGraph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        out.push(cert(
            "join-k2-2k1",
            "diamond graph, realized as an edge joined to two isolated vertices",
            b.spec,
            CertTarget::Gbei(g),
            vec![b.fs(1, 3, 2, 4), b.f(1, 2), b.f(1, 4), b.f(2, 3)],
            vec![(b.f(1, 3), 2), (b.f(2, 4), 2)],
        ));
    }

    // Diamond with two pendant edges, trees hanging at vertices 1 and 2 of
    // the diamond whose hinge is 1-3.
    {
        let b = Builder::new(6);
        let g = SimpleGraph::new(
            6,
            &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3), (1, 5), (2, 6)],
        )
        .unwrap();
        out.push(cert(
            "diamond-pendants-1",
            "diamond with pendant edges at a hinge vertex and a rim vertex",
            b.spec,
            CertTarget::Gbei(g),
            vec![
                b.fs(1, 3, 2, 6),
                b.fs(1, 5, 3, 4),
                b.f(1, 2),
                b.f(1, 4),
                b.f(2, 3),
            ],
            vec![
                (b.f(1, 3), 2),
                (b.f(2, 6), 2),
                (b.f(1, 5), 4),
                (b.f(3, 4), 4),
            ],
        ));
    }

    // Same shape with the diamond hinge on 2-4 instead.
    {
        let b = Builder::new(6);
        let g = SimpleGraph::new(
            6,
            &[(1, 2), (2, 3), (3, 4), (1, 4), (2, 4), (1, 5), (2, 6)],
        )
        .unwrap();
        out.push(cert(
            "diamond-pendants-2",
            "diamond with pendant edges at both rim vertices",
            b.spec,
            CertTarget::Gbei(g),
            vec![
                b.fs(1, 5, 2, 4),
                b.fs(2, 6, 3, 4),
                b.f(1, 2),
                b.f(1, 4),
                b.f(2, 3),
            ],
            vec![
                (b.f(1, 5), 2),
                (b.f(2, 4), 2),
                (b.f(2, 6), 4),
                (b.f(3, 4), 4),
            ],
        ));
    }

    // 4-clique with two pendant edges: five equations.
    {
        let b = Builder::new(6);
        let g = SimpleGraph::new(
            6,
            &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 5), (2, 6)],
        )
        .unwrap();
        out.push(cert(
            "k4-pendants",
            "4-clique with pendant edges at two of its vertices",
            b.spec,
            CertTarget::Gbei(g),
            vec![
                b.fs(1, 3, 2, 6),
                b.fs(1, 5, 3, 4),
                b.fs(1, 4, 2, 3),
                b.f(1, 2),
                b.f(2, 4),
            ],
            vec![
                (b.f(1, 3), 3),
                (b.f(2, 6), 3),
                (b.f(1, 5), 5),
                (b.f(3, 4), 5),
                (b.f(1, 4), 2),
                (b.f(2, 3), 2),
            ],
        ));
    }

    // Join of an edge with a path plus an isolated vertex: five equations
    // meet the connectivity lower bound, so the arithmetical rank is exact.
    {
        let b = Builder::new(5);
        let g = SimpleGraph::new(
            5,
            &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4)],
        )
        .unwrap();
        out.push(cert(
            "join-k2-k2k1",
            "edge joined to an edge plus an isolated vertex",
            b.spec,
            CertTarget::Gbei(g),
            vec![
                b.fs(1, 3, 2, 5),
                b.fs(1, 4, 2, 3),
                b.fs(1, 5, 3, 4),
                b.f(1, 2),
                b.f(2, 4),
            ],
            vec![
                (b.f(1, 3), 3),
                (b.f(2, 5), 3),
                (b.f(1, 4), 2),
                (b.f(2, 3), 2),
                (b.f(1, 5), 5),
                (b.f(3, 4), 5),
            ],
        ));
    }

    // Path on three vertices joined to two isolated vertices.
    {
        let b = Builder::new(5);
        let g = SimpleGraph::new(
            5,
            &[(1, 2), (2, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        )
        .unwrap();
        out.push(cert(
            "join-p3-2k1",
            "path on three vertices joined to two isolated vertices",
            b.spec,
            CertTarget::Gbei(g),
            vec![
                b.f(1, 2),
                b.f(2, 3),
                b.f(1, 5),
                b.f(3, 4),
                b.fs(1, 4, 2, 5),
                b.fs(2, 4, 3, 5),
            ],
            vec![
                (b.f(1, 4), 2),
                (b.f(2, 5), 2),
                (b.f(2, 4), 2),
                (b.f(3, 5), 2),
            ],
        ));
    }

    // Path on four vertices joined to two isolated vertices.
    {
        let b = Builder::new(6);
        let g = SimpleGraph::new(
            6,
            &[
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 5),
                (1, 6),
                (2, 5),
                (2, 6),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
            ],
        )
        .unwrap();
        out.push(cert(
            "join-p4-2k1",
            "path on four vertices joined to two isolated vertices",
            b.spec,
            CertTarget::Gbei(g),
            vec![
                b.f(1, 2),
                b.f(2, 3),
                b.f(3, 4),
                b.f(1, 6),
                b.f(4, 5),
                b.fs(1, 5, 2, 6),
                b.fs(2, 5, 3, 6),
                b.fs(3, 5, 4, 6),
            ],
            vec![
                (b.f(1, 5), 2),
                (b.f(2, 6), 2),
                (b.f(2, 5), 4),
                (b.f(3, 6), 4),
                (b.f(3, 5), 2),
                (b.f(4, 6), 2),
            ],
        ));
    }

    // Star with three leaves joined to two isolated vertices.
    {
        let b = Builder::new(6);
        let g = SimpleGraph::new(
            6,
            &[
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (1, 6),
                (2, 5),
                (2, 6),
                (3, 5),
                (3, 6),
                (4, 5),
                (4, 6),
            ],
        )
        .unwrap();
        out.push(cert(
            "join-k13-2k1",
            "three-leaf star joined to two isolated vertices",
            b.spec,
            CertTarget::Gbei(g),
            vec![
                b.fs(1, 2, 3, 6),
                b.fs(1, 5, 2, 6),
                b.fs(1, 6, 4, 5),
                b.f(1, 3),
                b.f(1, 4),
                b.f(2, 5),
                b.f(3, 5),
                b.f(4, 6),
            ],
            vec![
                (b.f(1, 2), 2),
                (b.f(3, 6), 2),
                (b.f(1, 5), 3),
                (b.f(2, 6), 3),
                (b.f(1, 6), 2),
                (b.f(4, 5), 2),
            ],
        ));
    }

    // Triangle joined to two isolated vertices.
    {
        let b = Builder::new(5);
        let g = SimpleGraph::new(
            5,
            &[(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        )
        .unwrap();
        out.push(cert(
            "join-k3-2k1",
            "triangle joined to two isolated vertices",
            b.spec,
            CertTarget::Gbei(g),
            vec![
                b.fs(1, 2, 3, 4),
                b.fs(1, 3, 2, 5),
                b.fs(1, 5, 2, 4),
                b.f(1, 4),
                b.f(2, 3),
                b.f(3, 5),
            ],
            vec![
                (b.f(1, 2), 3),
                (b.f(3, 4), 3),
                (b.f(1, 3), 2),
                (b.f(2, 5), 2),
                (b.f(1, 5), 5),
                (b.f(2, 4), 5),
            ],
        ));
    }

    out
}

pub fn builtin(name: &str) -> Result<Certificate> {
    builtin_catalog()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::InvalidInput(format!("no builtin certificate named {name:?}")))
}

/// Render a certificate in the text format. Graph targets reference a graph
/// file by name; the graph text itself is returned separately.
pub fn render_certificate(
    cert: &Certificate,
    graph_file: Option<&str>,
) -> Result<(String, Option<String>)> {
    let order = cert.spec.default_order();
    let mut out = String::new();
    out.push_str(&format!("# {}\n", cert.name));
    if !cert.source.is_empty() {
        out.push_str(&format!("# {}\n", cert.source));
    }
    out.push_str(&format!(
        "ring {} {} {}\n",
        cert.spec.m,
        cert.spec.n,
        cert.spec.characteristic
    ));
    let mut graph_text = None;
    out.push_str("target:\n");
    match &cert.target {
        CertTarget::Explicit(gens) => {
            for g in gens {
                out.push_str(&g.to_string_with(&order));
                out.push('\n');
            }
        }
        CertTarget::Gbei(g) => {
            let file = graph_file.ok_or_else(|| {
                Error::InvalidInput("graph-target certificate needs a graph file name".into())
            })?;
            out.push_str(&format!("gbei {file}\n"));
            graph_text = Some(g.to_text());
        }
    }
    out.push_str("witness:\n");
    for w in &cert.witness {
        out.push_str(&w.to_string_with(&order));
        out.push('\n');
    }
    out.push_str("claims:\n");
    for (p, k) in &cert.claims {
        out.push_str(&format!("f {} ^ {}\n", p.to_string_with(&order), k));
    }
    Ok((out, graph_text))
}

/// Parse the text format. `load_graph` resolves the file name in a
/// `gbei <file>` target line.
pub fn parse_certificate(
    name: &str,
    text: &str,
    load_graph: &dyn Fn(&str) -> Result<SimpleGraph>,
) -> Result<Certificate> {
    // Header comments carry display metadata: a name echo, then a
    // one-line description.
    let source = text
        .lines()
        .map(str::trim)
        .take_while(|l| l.is_empty() || l.starts_with('#'))
        .filter_map(|l| l.strip_prefix('#').map(str::trim))
        .filter(|l| !l.is_empty() && *l != name)
        .collect::<Vec<_>>()
        .join("; ");
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty certificate".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 4 || parts[0] != "ring" {
        return Err(Error::Parse(format!(
            "expected header 'ring m n char', got {header:?}"
        )));
    }
    let m: u32 = parts[1]
        .parse()
        .map_err(|_| Error::Parse(format!("bad m {:?}", parts[1])))?;
    let n: u32 = parts[2]
        .parse()
        .map_err(|_| Error::Parse(format!("bad n {:?}", parts[2])))?;
    let ch: u64 = parts[3]
        .parse()
        .map_err(|_| Error::Parse(format!("bad characteristic {:?}", parts[3])))?;
    let spec = RingSpec::new(m, n, ch).map_err(|e| Error::Parse(e.to_string()))?;

    #[derive(PartialEq)]
    enum Section {
        None,
        Target,
        Witness,
        Claims,
    }
    let mut section = Section::None;
    let mut target: Option<CertTarget> = None;
    let mut explicit = Vec::new();
    let mut witness = Vec::new();
    let mut claims = Vec::new();
    for line in lines {
        match line {
            "target:" => {
                section = Section::Target;
                continue;
            }
            "witness:" => {
                if section != Section::Target {
                    return Err(Error::Parse("witness: before target:".into()));
                }
                if target.is_none() {
                    target = Some(CertTarget::Explicit(std::mem::take(&mut explicit)));
                }
                section = Section::Witness;
                continue;
            }
            "claims:" => {
                if section != Section::Witness {
                    return Err(Error::Parse("claims: before witness:".into()));
                }
                section = Section::Claims;
                continue;
            }
            _ => {}
        }
        match section {
            Section::None => {
                return Err(Error::Parse(format!("unexpected line before target: {line:?}")))
            }
            Section::Target => {
                if let Some(file) = line.strip_prefix("gbei ") {
                    if target.is_some() || !explicit.is_empty() {
                        return Err(Error::Parse("mixed gbei and polynomial target".into()));
                    }
                    let g = load_graph(file.trim())?;
                    if g.n() as u32 != n {
                        return Err(Error::Parse(format!(
                            "graph has {} vertices but the ring has n = {n}",
                            g.n()
                        )));
                    }
                    target = Some(CertTarget::Gbei(g));
                } else {
                    if target.is_some() {
                        return Err(Error::Parse("polynomial after gbei target".into()));
                    }
                    explicit.push(Polynomial::parse(spec, line)?);
                }
            }
            Section::Witness => witness.push(Polynomial::parse(spec, line)?),
            Section::Claims => {
                let body = line.strip_prefix('f').map(str::trim).ok_or_else(|| {
                    Error::Parse(format!("claim line must start with 'f': {line:?}"))
                })?;
                let (poly_text, exp_text) = body
                    .rsplit_once('^')
                    .ok_or_else(|| Error::Parse(format!("claim line needs '^ k': {line:?}")))?;
                let k: u32 = exp_text
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad claim exponent {exp_text:?}")))?;
                claims.push((Polynomial::parse(spec, poly_text.trim())?, k));
            }
        }
    }
    let target = match target {
        Some(t) => t,
        None if !explicit.is_empty() => CertTarget::Explicit(explicit),
        None => return Err(Error::Parse("certificate has no target".into())),
    };
    if witness.is_empty() {
        return Err(Error::Parse("certificate has no witness generators".into()));
    }
    Ok(Certificate {
        name: name.into(),
        spec,
        target,
        witness,
        claims,
        source,
    })
}
