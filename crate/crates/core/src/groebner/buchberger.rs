use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{CoeffField, Field};
use crate::poly::{MPoly, Monomial};

use super::order::MonomialOrder;

/// Terms sorted descending in some monomial order.
pub(crate) type Terms<K> = Vec<(Monomial, K)>;

pub(crate) fn sorted_terms<K: Field>(p: &MPoly<K>, order: MonomialOrder) -> Terms<K> {
    let mut t = p.terms().to_vec();
    if order != MonomialOrder::Grevlex {
        t.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    t
}

/// `a*p - c*m*q` where both inputs are sorted in `order`.
fn combine<K: Field>(order: MonomialOrder, a: &K, p: &[(Monomial, K)], c: &K, m: &Monomial, q: &[(Monomial, K)]) -> Terms<K> {
    let scale_p = !a.is_one();
    let mut out = Vec::with_capacity(p.len() + q.len());
    let (mut i, mut j) = (0, 0);
    let qt = |j: usize| (q[j].0.mul(m), q[j].1.mul(c));
    while i < p.len() && j < q.len() {
        let qm = q[j].0.mul(m);
        match order.cmp(&p[i].0, &qm) {
            Ordering::Greater => {
                let v = if scale_p { p[i].1.mul(a) } else { p[i].1.clone() };
                out.push((p[i].0, v));
                i += 1;
            }
            Ordering::Less => {
                let (mm, v) = qt(j);
                out.push((mm, v.neg()));
                j += 1;
            }
            Ordering::Equal => {
                let lhs = if scale_p { p[i].1.mul(a) } else { p[i].1.clone() };
                let v = lhs.sub(&q[j].1.mul(c));
                if !v.is_zero() {
                    out.push((qm, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for t in &p[i..] {
        out.push((t.0, if scale_p { t.1.mul(a) } else { t.1.clone() }));
    }
    for jj in j..q.len() {
        let (mm, v) = qt(jj);
        out.push((mm, v.neg()));
    }
    out
}

fn is_rational<K: Field>(ctx: &K::Ctx) -> bool {
    K::descriptor(ctx) == CoeffField::Rationals
}

fn normalize<K: Field>(terms: &mut [(Monomial, K)]) {
    let mut cs: Vec<K> = terms.iter().map(|t| t.1.clone()).collect();
    K::normalize_content(&mut cs);
    for (t, c) in terms.iter_mut().zip(cs) {
        t.1 = c;
    }
}

/// Reduce `p` by `basis`. The result is a nonzero scalar multiple of the
/// remainder; it is the remainder itself when every basis element is monic.
/// With `full` unset only the leading term is reduced.
pub(crate) fn reduce<K: Field>(
    ctx: &K::Ctx,
    order: MonomialOrder,
    mut p: Terms<K>,
    basis: &[&[(Monomial, K)]],
    full: bool,
    content: bool,
) -> Terms<K> {
    let mut out: Terms<K> = Vec::new();
    let mut steps = 0usize;
    let rational = content && is_rational::<K>(ctx);
    while let Some((m, c)) = p.first().cloned() {
        let divisor = basis.iter().find(|g| g[0].0.divides(&m));
        match divisor {
            Some(g) => {
                let (gm, a) = (&g[0].0, &g[0].1);
                let q = gm.quotient_of(&m).expect("divides");
                if !a.is_one() {
                    for t in out.iter_mut() {
                        t.1 = t.1.mul(a);
                    }
                }
                p = combine(order, a, &p[1..], &c, &q, &g[1..]);
                steps += 1;
                if rational && steps.is_multiple_of(8) {
                    let split = out.len();
                    out.append(&mut p);
                    normalize(&mut out);
                    p = out.split_off(split);
                }
            }
            None => {
                if !full {
                    out.append(&mut p);
                    break;
                }
                out.push(p.remove(0));
            }
        }
    }
    out
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with the Gebauer–Möller criteria. Returns the
/// reduced basis (monic, sorted by increasing leading monomial) and the
/// number of S-pairs reduced.
pub(crate) fn groebner<K: Field>(
    ctx: &K::Ctx,
    order: MonomialOrder,
    gens: Vec<Terms<K>>,
    budget: u64,
) -> Result<(Vec<Terms<K>>, u64)> {
    let mut polys: Vec<Terms<K>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in gens {
        let basis: Vec<&[(Monomial, K)]> =
            polys.iter().zip(&active).filter(|(_, &a)| a).map(|(p, _)| p.as_slice()).collect();
        let mut g = reduce(ctx, order, g, &basis, true, true);
        if g.is_empty() {
            continue;
        }
        if g[0].0.is_one() {
            return Ok((vec![vec![(Monomial::one(), K::one(ctx))]], 0));
        }
        normalize(&mut g);
        update(&mut polys, &mut active, &mut pairs, g);
    }

    let mut spent = 0u64;
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                order
                    .cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then((pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        if spent >= budget {
            return Err(Error::Budget { what: "Groebner basis S-pair reductions".into(), limit: budget });
        }
        spent += 1;
        let (f, g) = (&polys[pair.i], &polys[pair.j]);
        let mf = f[0].0.quotient_of(&pair.lcm).expect("lcm");
        let mg = g[0].0.quotient_of(&pair.lcm).expect("lcm");
        // S = lc(g)*mf*f - lc(f)*mg*g, leading terms cancel
        let fp: Terms<K> = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
        let s = combine(order, &g[0].1, &fp, &f[0].1, &mg, &g[1..]);
        let basis: Vec<&[(Monomial, K)]> =
            polys.iter().zip(&active).filter(|(_, &a)| a).map(|(p, _)| p.as_slice()).collect();
        let mut h = reduce(ctx, order, s, &basis, true, true);
        if h.is_empty() {
            continue;
        }
        if h[0].0.is_one() {
            return Ok((vec![vec![(Monomial::one(), K::one(ctx))]], spent));
        }
        normalize(&mut h);
        update(&mut polys, &mut active, &mut pairs, h);
    }

    let mut keep: Vec<Terms<K>> =
        polys.into_iter().zip(active).filter(|(_, a)| *a).map(|(p, _)| p).collect();
    keep.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    for p in keep.iter_mut() {
        make_monic(p);
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<&[(Monomial, K)]> =
            keep.iter().enumerate().filter(|(o, _)| *o != k).map(|(_, p)| p.as_slice()).collect();
        let mut r = vec![keep[k][0].clone()];
        r.extend(reduce(ctx, order, keep[k][1..].to_vec(), &others, true, false));
        reduced.push(r);
    }
    Ok((reduced, spent))
}

fn make_monic<K: Field>(p: &mut [(Monomial, K)]) {
    if let Some(inv) = p.first().and_then(|t| t.1.inv()) {
        if !p[0].1.is_one() {
            for t in p.iter_mut() {
                t.1 = t.1.mul(&inv);
            }
        }
    }
}

fn update<K: Field>(
    polys: &mut Vec<Terms<K>>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: Terms<K>,
) {
    let hi = polys.len();
    let hm = h[0].0;
    let mut c: Vec<(usize, Monomial)> = (0..polys.len())
        .filter(|&g| active[g])
        .map(|g| (g, hm.lcm(&polys[g][0].0)))
        .collect();
    let mut d: Vec<(usize, Monomial)> = Vec::new();
    while !c.is_empty() {
        let (g1, l1) = c.remove(0);
        let coprime = hm.is_coprime(&polys[g1][0].0);
        if coprime
            || (!c.iter().any(|(_, l2)| l2.divides(&l1)) && !d.iter().any(|(_, l2)| l2.divides(&l1)))
        {
            d.push((g1, l1));
        }
    }
    let e: Vec<Pair> = d
        .into_iter()
        .filter(|(g, _)| !hm.is_coprime(&polys[*g][0].0))
        .map(|(g, lcm)| Pair { i: g, j: hi, lcm })
        .collect();
    pairs.retain(|p| {
        let li = hm.lcm(&polys[p.i][0].0);
        let lj = hm.lcm(&polys[p.j][0].0);
        !(hm.divides(&p.lcm) && li != p.lcm && lj != p.lcm)
    });
    pairs.extend(e);
    for g in 0..polys.len() {
        if active[g] && hm.divides(&polys[g][0].0) {
            active[g] = false;
        }
    }
    polys.push(h);
    active.push(true);
}
