use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::family::{os_index_parts, separation_from, SeparationFailure};
use super::{describe, Analysis, GroupAnalysis, Status, Verdict, MODELS};
use crate::group::{from_elements, intersect_sorted, ElementId, Group, Subgroup};
use crate::poset::{lemmaprank_from, p_rank_from, retract_from, PosetKind, SubgroupPoset};
use crate::topology::{euler_characteristic, is_acyclic, poset_complex, reduced_homology};
use crate::{arith, Error, Result};

/// Turns capacity errors into skipped verdicts.
fn guarded(claim: &str, name: &str, prime: Option<u64>, f: impl FnOnce() -> Result<Verdict>) -> Result<Verdict> {
    match f() {
        Err(e) if e.is_capacity() => Ok(Verdict::skipped(claim, name, prime, &e)),
        other => other,
    }
}

fn require_divisor(a: &Analysis<'_>) -> Result<()> {
    let (part, _) = arith::p_part(a.group().order(), a.prime());
    if part.is_one() {
        return Err(Error::InvalidArgument(alloc::format!("{} does not divide the group order", a.prime())));
    }
    Ok(())
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Verified
    } else {
        Status::Refuted
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":")
}

/// `χ(K(S_p(G))) ≡ 1 (mod |G|_p)`.
pub fn brown_check(a: &Analysis<'_>) -> Result<Verdict> {
    require_divisor(a)?;
    let p = Some(a.prime());
    guarded("brown", a.name(), p, || {
        let c = poset_complex(a.poset(PosetKind::Sp)?);
        let chi = euler_characteristic(&c);
        let (part, _) = arith::p_part(a.group().order(), a.prime());
        let modulus = BigInt::from(part);
        let residue = ((BigInt::from(chi) % &modulus) + &modulus) % &modulus;
        Ok(Verdict::new("brown", a.name(), p, status(residue.is_one()))
            .with("chi", chi)
            .with("modulus", modulus)
            .with("residue", residue)
            .with("f", join(c.f_vector())))
    })
}

/// Both directions: `O_p(G) ≠ 1` forces acyclic `K(A_p(G))`; `O_p(G) = 1`
/// must leave some nonzero reduced homology.
pub fn quillen_check(a: &Analysis<'_>) -> Result<Verdict> {
    require_divisor(a)?;
    let p = Some(a.prime());
    guarded("quillen", a.name(), p, || {
        let op = a.p_core()?;
        let ap = a.poset(PosetKind::Ap)?;
        let h = a.homology(PosetKind::Ap)?;
        let rank = ap.height() + 1;
        let small_rank = ap.height() <= 2;
        let (direction, ok) = if op.is_trivial() {
            ("op-trivial", !h.is_zero() && !ap.is_empty())
        } else {
            ("op-nontrivial", !ap.is_empty() && h.is_zero())
        };
        let mut v = Verdict::new("quillen", a.name(), p, status(ok))
            .with("op_order", op.order())
            .with("direction", direction)
            .with("rank", rank)
            .with("homology", h.summary())
            .with("prank3", if small_rank { "yes" } else { "no" });
        if !ok {
            let alarm = if op.is_trivial() && small_rank {
                "PROBABLE-BUG:rank-at-most-3-case-must-have-nonzero-homology"
            } else if !op.is_trivial() {
                "PROBABLE-BUG:nontrivial-p-core-must-give-acyclic-complex"
            } else {
                "counterexample-candidate"
            };
            v = v.with("alarm", alarm);
        }
        Ok(v)
    })
}

/// Equal reduced homology across `S_p`, `A_p`, `B_p`, `i(S_p)`, `i(A_p)`,
/// plus the element-set inclusions between the models.
pub fn invariance_check(a: &Analysis<'_>) -> Result<Verdict> {
    require_divisor(a)?;
    let p = Some(a.prime());
    guarded("invariance", a.name(), p, || {
        let base = a.homology(PosetKind::Sp)?;
        let mut v = Verdict::new("invariance", a.name(), p, Status::Verified);
        let mut mismatch = None;
        for kind in MODELS {
            let h = a.homology(kind)?;
            v = v.with(kind.name(), h.summary());
            if h != base && mismatch.is_none() {
                mismatch = Some(kind);
            }
        }
        if let Some(kind) = mismatch {
            v.status = Status::Refuted;
            v = v.with("witness", kind);
        }
        let sp = a.poset(PosetKind::Sp)?;
        let isp = a.poset(PosetKind::ISp)?;
        let inside = |small: PosetKind, big: &SubgroupPoset| -> Result<bool> {
            Ok(a.poset(small)?.elements().iter().all(|h| big.index_of(h).is_some()))
        };
        let nested = [
            ("Ap<=Sp", inside(PosetKind::Ap, sp)?),
            ("Bp<=iSp", inside(PosetKind::Bp, isp)?),
            ("iSp<=Sp", inside(PosetKind::ISp, sp)?),
            ("iAp<=Ap", inside(PosetKind::IAp, a.poset(PosetKind::Ap)?)?),
        ];
        let failed: Vec<&str> = nested.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
        v = v.with("inclusions", if failed.is_empty() { "ok".into() } else { failed.join(":") });
        if !failed.is_empty() {
            v.status = Status::Refuted;
        }
        Ok(v)
    })
}

/// The rank formula over every proper normal subgroup.
pub fn lemmaprank_check(a: &Analysis<'_>) -> Result<Verdict> {
    require_divisor(a)?;
    let p = Some(a.prime());
    guarded("lemmaprank", a.name(), p, || {
        let g = a.group();
        let ap = a.poset(PosetKind::Ap)?;
        let rank = p_rank_from(ap).rank;
        let whole = g.table()?.len();
        let mut checked = 0;
        let mut v = Verdict::new("lemmaprank", a.name(), p, Status::Verified).with("rank", rank);
        for n in g.normal_subgroups()?.iter().filter(|n| n.order() < whole) {
            let w = lemmaprank_from(g, ap, n)?;
            checked += 1;
            if w.rank != rank {
                v.status = Status::Refuted;
                v = v.with("witness_normal", describe(g, n)).with("formula", w.rank);
                break;
            }
        }
        Ok(v.with("normals", checked))
    })
}

/// The rank formula for one named normal subgroup `N`.
pub fn lemmaprank_normal_check(a: &Analysis<'_>, n_name: &str, n: &Subgroup) -> Result<Verdict> {
    require_divisor(a)?;
    let claim = alloc::format!("lemmaprank:{n_name}");
    let p = Some(a.prime());
    guarded(&claim, a.name(), p, || {
        let g = a.group();
        let ap = a.poset(PosetKind::Ap)?;
        let rank = p_rank_from(ap).rank;
        let w = lemmaprank_from(g, ap, n)?;
        let mut v = Verdict::new(claim.clone(), a.name(), p, status(w.rank == rank))
            .with("rank", rank)
            .with("formula", w.rank)
            .with("normal", describe(g, n));
        if let Some((outer, m)) = &w.decomposition {
            v = v.with("a", describe(g, outer)).with("centralizer_rank", m);
        }
        Ok(v.with("witness", describe(g, &w.witness)))
    })
}

/// The retraction lemma for `H ≤ G`: when its hypothesis holds, `A_p(G)`
/// and `A_p(H)` must share homology and every upward link must be acyclic.
/// A failed hypothesis is reported, not refuted.
pub fn retract_check(a: &Analysis<'_>, h_name: &str, h: &Subgroup) -> Result<Verdict> {
    require_divisor(a)?;
    let claim = alloc::format!("retract:{h_name}");
    let p = Some(a.prime());
    guarded(&claim, a.name(), p, || {
        let g = a.group();
        let out = retract_from(g, a.poset(PosetKind::Ap)?, h)?;
        let v = Verdict::new(claim.clone(), a.name(), p, Status::Verified);
        if !out.hypothesis_holds {
            let e = out.violating.as_ref().expect("violating subgroup");
            return Ok(v.with("hypothesis", "fails").with("violating", describe(g, e)));
        }
        let hg = a.homology(PosetKind::Ap)?;
        let reduced = out.reduced.as_ref().expect("reduced poset");
        let hh = reduced_homology(&poset_complex(reduced));
        let bad_link = out.links.iter().position(|l| !is_acyclic(&poset_complex(l)));
        let ok = hg == &hh && bad_link.is_none();
        let mut v = v
            .with("hypothesis", "holds")
            .with("schedule", out.schedule.len())
            .with("homology_g", hg.summary())
            .with("homology_h", hh.summary());
        v.status = status(ok);
        if let Some(i) = bad_link {
            v = v.with("witness_link", describe(g, &out.schedule[i]));
        }
        Ok(v)
    })
}

/// Outcome of scanning the chains of an order complex for one whose
/// stabilizer is normal.
#[derive(Clone, Debug)]
pub struct StabilizerSearch {
    pub acyclic: bool,
    pub dimension: i64,
    /// Member indices of the first chain found, and its stabilizer.
    pub found: Option<(Vec<u32>, Subgroup)>,
    pub chains_examined: usize,
}

/// Chains are scanned by dimension, then in sorted order; the stabilizer of
/// `A_0 < … < A_j` is `N_G(A_0) ∩ … ∩ N_G(A_j)`.
pub fn normal_stabilizer_search(group: &Group, x: &SubgroupPoset) -> Result<StabilizerSearch> {
    if !x.is_invariant() {
        return Err(Error::InvalidArgument("poset is not invariant under the group".into()));
    }
    let t = group.table()?;
    let c = poset_complex(x);
    let acyclic = is_acyclic(&c);
    let mut normalizers: Vec<Option<Subgroup>> = alloc::vec![None; x.len()];
    let mut examined = 0;
    for d in 0..(c.dimension() + 1) as usize {
        for s in c.simplices(d) {
            examined += 1;
            let mut elems: Option<Vec<ElementId>> = None;
            for &v in s {
                let n = match &normalizers[v as usize] {
                    Some(n) => n.clone(),
                    None => {
                        let n = group.normalizer(&x.elements()[v as usize])?;
                        normalizers[v as usize] = Some(n.clone());
                        n
                    }
                };
                elems = Some(match elems {
                    None => n.elements().to_vec(),
                    Some(e) => intersect_sorted(&e, n.elements()),
                });
            }
            let stab = from_elements(t, elems.expect("nonempty simplex"));
            if group.is_normal(&stab)? {
                return Ok(StabilizerSearch {
                    acyclic,
                    dimension: c.dimension(),
                    found: Some((s.to_vec(), stab)),
                    chains_examined: examined,
                });
            }
        }
    }
    Ok(StabilizerSearch { acyclic, dimension: c.dimension(), found: None, chains_examined: examined })
}

/// Runs the search when `O_p(G) ≠ 1` and `m_p(G) ≤ 3`, on `S_p(G)` if it is
/// at most 2-dimensional and on `A_p(G)` otherwise. Outside that range the
/// verdict is marked `applicable=no` and no search runs.
pub fn normal_stab_check(a: &Analysis<'_>) -> Result<Verdict> {
    require_divisor(a)?;
    let p = Some(a.prime());
    guarded("normal-stab", a.name(), p, || {
        let g = a.group();
        let op = a.p_core()?;
        let ap = a.poset(PosetKind::Ap)?;
        let sp = a.poset(PosetKind::Sp)?;
        let applicable = !op.is_trivial() && ap.height() < 3;
        if !applicable {
            let reason = if op.is_trivial() { "trivial-p-core" } else { "rank-above-3" };
            return Ok(Verdict::new("normal-stab", a.name(), p, Status::Verified)
                .with("applicable", "no")
                .with("reason", reason));
        }
        let x = if sp.height() > 2 { ap } else { sp };
        let search = normal_stabilizer_search(g, x)?;
        let in_range = search.acyclic && search.dimension <= 2;
        let mut v = Verdict::new("normal-stab", a.name(), p, Status::Verified)
            .with("applicable", "yes")
            .with("poset", x.kind())
            .with("acyclic", search.acyclic)
            .with("dimension", search.dimension)
            .with("chains", search.chains_examined);
        match &search.found {
            Some((chain, stab)) => {
                let orders = chain.iter().map(|&i| x.elements()[i as usize].order());
                v = v.with("chain_orders", join(orders)).with("stabilizer_order", stab.order());
            }
            None => {
                v = v.with("found", "none");
                v.status = Status::Refuted;
                if in_range {
                    v = v.with("alarm", "PROBABLE-BUG:acyclic-2-dimensional-complex-without-normal-stabilizer");
                }
            }
        }
        Ok(v)
    })
}

/// The solvable subgroups form a separating family.
pub fn separating_check(ga: &GroupAnalysis<'_>) -> Result<Verdict> {
    guarded("separating", ga.name(), None, || {
        let g = ga.group();
        let slv = ga.solvable_family()?;
        let failure = separation_from(g, slv, ga.lattice()?)?;
        let mut v = Verdict::new("separating", ga.name(), None, status(failure.is_none()))
            .with("family", slv.label())
            .with("members", slv.len());
        if let Some(f) = failure {
            v = v.with("clause", f.clause());
            match f {
                SeparationFailure::ContainsWhole => {}
                SeparationFailure::NotSubgroupClosed { member, sub } => {
                    v = v.with("member", describe(g, &member)).with("sub", describe(g, &sub));
                }
                SeparationFailure::NotExtensionClosed { h, k } => {
                    v = v.with("h", describe(g, &h)).with("k", describe(g, &k));
                }
            }
        }
        Ok(v)
    })
}

/// `i_SLV` at the trivial subgroup and at one representative of each class
/// of maximal solvable subgroups. Every value must have a denominator
/// dividing `[N_G(H):H]`; with `expect_one`, `i_SLV(1)` must equal 1.
pub fn os_index_check(ga: &GroupAnalysis<'_>, expect_one: bool) -> Result<Verdict> {
    guarded("os-index", ga.name(), None, || {
        let g = ga.group();
        let slv = ga.solvable_family()?;
        let (i1, chi1, idx1) = os_index_parts(g, slv, &Subgroup::trivial())?;
        let mut exact = (&i1 * BigInt::from(idx1)).is_integer();
        let mut seen: BTreeSet<Vec<ElementId>> = BTreeSet::new();
        let mut maximal = Vec::new();
        for h in slv.maximal() {
            if seen.contains(h.elements()) {
                continue;
            }
            for c in g.subgroup_class(h)? {
                seen.insert(c.elements().to_vec());
            }
            let (ih, _, idx) = os_index_parts(g, slv, h)?;
            exact &= (&ih * BigInt::from(idx)).is_integer();
            maximal.push(alloc::format!("{}->{}", h.order(), ih));
        }
        let ok = exact && (!expect_one || i1.is_one());
        Ok(Verdict::new("os-index", ga.name(), None, status(ok))
            .with("family", slv.label())
            .with("i1", &i1)
            .with("chi1", chi1)
            .with("index1", idx1)
            .with("expect_one", expect_one)
            .with("maximal", maximal.join(";")))
    })
}
