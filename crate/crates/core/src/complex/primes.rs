//! Candidate minimal primes over `I_Δ`: a partition of the facets into groups
//! `Δ_i`, each with a witness set `K_i ⊆ ∩Δ_i` that escapes every facet
//! outside the group, gives `Σ P_{Δ_i} + Σ_i Σ_{k∈K_i} L_{Δ_i∖k}`.

use super::{ComplexError, SimplicialComplex};
use crate::ideals::{
    i_delta_gens_in_s, k_delta_gens, q_delta_gens, IdealError, IdealName, IdealSpec, QMethod,
    RingContext,
};
use crate::poly::{buchberger, Budget, GroebnerBasis, Polynomial};
use crate::table::{FaceSet, Shape};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;

pub const FACET_CAP: usize = 8;

/// A facet partition with one witness set per group. Facet indices are
/// 1-based positions in the canonical facet list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentDescriptor {
    pub partition: Vec<Vec<usize>>,
    pub witnesses: Vec<Vec<usize>>,
}

impl ComponentDescriptor {
    pub fn is_trivial(&self) -> bool {
        self.partition.len() == 1
    }

    /// Checks the descriptor against `complex`.
    pub fn validate(&self, complex: &SimplicialComplex) -> Result<(), ComplexError> {
        let bad = |m: String| Err(ComplexError::InvalidDescriptor(m));
        let m = complex.facets().len();
        if self.partition.len() != self.witnesses.len() {
            return bad("one witness set per group is required".into());
        }
        let mut seen = vec![false; m];
        for group in &self.partition {
            if group.is_empty() {
                return bad("empty group".into());
            }
            for &f in group {
                if f == 0 || f > m {
                    return bad(format!("facet index {f} outside 1..={m}"));
                }
                if std::mem::replace(&mut seen[f - 1], true) {
                    return bad(format!("facet index {f} appears twice"));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("partition does not cover every facet".into());
        }
        for (group, k) in self.partition.iter().zip(&self.witnesses) {
            let k = FaceSet::new(k.clone());
            let common = group_intersection(complex, group);
            if !k.is_subset(&common) {
                return bad(format!("witness {k} is not inside {common}"));
            }
            for (idx, facet) in complex.facets().iter().enumerate() {
                if !group.contains(&(idx + 1)) && k.is_subset(facet) {
                    return bad(format!("witness {k} lies inside the outside facet {facet}"));
                }
            }
        }
        Ok(())
    }

    /// The faces `F∖{k}` whose zero-margin ideals the component contains.
    pub fn l_faces(&self, complex: &SimplicialComplex) -> Vec<FaceSet> {
        let mut out = BTreeSet::new();
        for (group, k) in self.partition.iter().zip(&self.witnesses) {
            for &f in group {
                for &v in k {
                    out.insert(complex.facets()[f - 1].without(v));
                }
            }
        }
        out.into_iter().collect()
    }

    /// Readable form such as `{1,2}{1,3}/{1} | {2,3}/{2,3}`.
    pub fn describe(&self, complex: &SimplicialComplex) -> String {
        self.partition
            .iter()
            .zip(&self.witnesses)
            .map(|(g, k)| {
                let facets = g.iter().map(|&f| complex.facets()[f - 1].to_string()).join("");
                format!("{facets}/{}", FaceSet::new(k.clone()))
            })
            .join(" | ")
    }
}

fn group_intersection(complex: &SimplicialComplex, group: &[usize]) -> FaceSet {
    group
        .iter()
        .map(|&f| complex.facets()[f - 1].clone())
        .reduce(|a, b| a.intersection(&b))
        .unwrap_or_default()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Minimality {
    Minimal,
    /// Contains the candidate at this position of the list.
    NotMinimal { contains: usize },
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentCandidate {
    pub descriptor: ComponentDescriptor,
    pub l_faces: Vec<FaceSet>,
    pub minimality: Minimality,
}

#[derive(Clone, Copy, Debug)]
pub struct CandidateOptions {
    /// Decide minimality by pairwise containment of rendered components.
    pub check_minimality: bool,
    pub budget: Budget,
}

impl Default for CandidateOptions {
    fn default() -> Self {
        CandidateOptions { check_minimality: true, budget: Budget::default() }
    }
}

fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for p in set_partitions(rest) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].insert(0, first);
            out.push(q);
        }
        let mut q = p;
        q.insert(0, vec![first]);
        out.push(q);
    }
    out
}

/// Witness sets allowed for `group`, smallest first.
fn witness_choices(complex: &SimplicialComplex, group: &[usize]) -> Vec<FaceSet> {
    let outside: Vec<&FaceSet> = complex
        .facets()
        .iter()
        .enumerate()
        .filter(|(i, _)| !group.contains(&(i + 1)))
        .map(|(_, f)| f)
        .collect();
    group_intersection(complex, group)
        .subsets()
        .into_iter()
        .filter(|k| outside.iter().all(|f| !k.is_subset(f)))
        .collect()
}

/// Enumerates descriptors and flags non-minimal ones.
pub fn minimal_prime_candidates(
    shape: &Shape,
    complex: &SimplicialComplex,
) -> Result<Vec<ComponentCandidate>, IdealError> {
    minimal_prime_candidates_with(shape, complex, CandidateOptions::default())
}

pub fn minimal_prime_candidates_with(
    shape: &Shape,
    complex: &SimplicialComplex,
    opts: CandidateOptions,
) -> Result<Vec<ComponentCandidate>, IdealError> {
    let m = complex.facets().len();
    if m > FACET_CAP {
        return Err(ComplexError::CapExceeded { facets: m, cap: FACET_CAP }.into());
    }
    let ids: Vec<usize> = (1..=m).collect();
    let mut found: Vec<(ComponentDescriptor, Vec<FaceSet>)> = Vec::new();
    let mut partitions = set_partitions(&ids);
    partitions.iter_mut().for_each(|p| p.sort());
    partitions.sort_by_key(|p| (p.len(), p.clone()));
    for partition in partitions {
        let choices: Vec<Vec<FaceSet>> = partition.iter().map(|g| witness_choices(complex, g)).collect();
        if choices.iter().any(Vec::is_empty) {
            continue;
        }
        let mut options: Vec<(ComponentDescriptor, Vec<FaceSet>)> = choices
            .iter()
            .multi_cartesian_product()
            .map(|ks| {
                let d = ComponentDescriptor {
                    partition: partition.clone(),
                    witnesses: ks.iter().map(|k| k.members().to_vec()).collect(),
                };
                let l = d.l_faces(complex);
                (d, l)
            })
            .collect();
        // Same partition: keep only the witness choices with minimal L-sets.
        options.sort_by_key(|(_, l)| l.len());
        for (d, l) in options {
            let dominated = found.iter().any(|(e, el)| {
                e.partition == d.partition && el.iter().all(|f| l.contains(f))
            });
            if !dominated {
                found.push((d, l));
            }
        }
    }
    let mut out: Vec<ComponentCandidate> = found
        .into_iter()
        .map(|(descriptor, l_faces)| ComponentCandidate {
            descriptor,
            l_faces,
            minimality: Minimality::Unchecked,
        })
        .collect();
    if opts.check_minimality {
        flag_minimality(shape, complex, &mut out, opts.budget)?;
    }
    Ok(out)
}

fn flag_minimality(
    shape: &Shape,
    complex: &SimplicialComplex,
    cands: &mut [ComponentCandidate],
    budget: Budget,
) -> Result<(), IdealError> {
    let mut cache = RenderCache::default();
    let rendered: Vec<IdealSpec> = cands
        .iter()
        .map(|c| render_with(&c.descriptor, shape, complex, budget, &mut cache))
        .collect::<Result<_, _>>()?;
    let gbs: Vec<GroebnerBasis> = rendered
        .iter()
        .map(|r| buchberger(r.ring.ring(), &r.generators, budget))
        .collect::<Result<_, _>>()?;
    let contains = |big: usize, small: usize| -> Result<bool, IdealError> {
        for g in &rendered[small].generators {
            if !gbs[big].contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    for i in 0..cands.len() {
        let mut flag = Minimality::Minimal;
        for j in 0..cands.len() {
            if i == j || !contains(i, j)? {
                continue;
            }
            // Equal ideals: only the later one is redundant.
            if j > i && contains(j, i)? {
                continue;
            }
            flag = Minimality::NotMinimal { contains: j };
            break;
        }
        cands[i].minimality = flag;
    }
    Ok(())
}

#[derive(Default)]
struct RenderCache {
    /// K+Q generators per facet group, as text in the S_Δ variable names.
    groups: HashMap<Vec<usize>, Vec<Polynomial>>,
}

/// Concrete generators in S_Δ: `K_Δ`, then `K+Q` of every group's
/// subcomplex, then the variables of each `L_{F∖k}`.
pub fn render_component(
    desc: &ComponentDescriptor,
    shape: &Shape,
    complex: &SimplicialComplex,
    budget: Budget,
) -> Result<IdealSpec, IdealError> {
    render_with(desc, shape, complex, budget, &mut RenderCache::default())
}

fn render_with(
    desc: &ComponentDescriptor,
    shape: &Shape,
    complex: &SimplicialComplex,
    budget: Budget,
    cache: &mut RenderCache,
) -> Result<IdealSpec, IdealError> {
    desc.validate(complex)?;
    let s = RingContext::s_delta(shape, complex)?;
    let mut gens = k_delta_gens(&s)?.0.generators;
    for group in &desc.partition {
        if !cache.groups.contains_key(group) {
            let facets = group.iter().map(|&f| complex.facets()[f - 1].clone()).collect();
            let sub = SimplicialComplex::new(complex.n(), facets)?;
            let si = RingContext::s_delta(shape, &sub)?;
            let mut p = k_delta_gens(&si)?.0.generators;
            p.extend(q_delta_gens(&si, QMethod::Elimination, budget)?.generators);
            let moved = p.iter().map(|g| g.rename_into(s.ring())).collect::<Result<Vec<_>, _>>()?;
            cache.groups.insert(group.clone(), moved);
        }
        gens.extend(cache.groups[group].iter().cloned());
    }
    for face in desc.l_faces(complex) {
        gens.extend(
            s.selectors()
                .iter()
                .enumerate()
                .filter(|(_, sel)| sel.face() == face)
                .map(|(v, _)| s.var_poly(crate::poly::VarId(v))),
        );
    }
    Ok(IdealSpec::new(IdealName::PComponent(desc.describe(complex)), s, gens))
}

/// `I_Δ` written in the S_Δ variables, for containment checks.
pub fn i_delta_in_s(shape: &Shape, complex: &SimplicialComplex) -> Result<Vec<Polynomial>, IdealError> {
    i_delta_gens_in_s(&RingContext::s_delta(shape, complex)?)
}

impl fmt::Display for Minimality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Minimality::Minimal => write!(f, "minimal"),
            Minimality::NotMinimal { contains } => write!(f, "not minimal (contains #{})", contains + 1),
            Minimality::Unchecked => write!(f, "unchecked"),
        }
    }
}
