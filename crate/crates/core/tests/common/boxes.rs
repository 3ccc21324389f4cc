//! Box-enumeration oracles for the minimal cycles `s_h` and `x^l`.

use num_traits::ToPrimitive;
use seifert_core::lattice::{canonical_cycle, chi, dual_cycle, CENTER};
use seifert_core::laufer::{to_antinef, x_series};
use seifert_core::random::{seifert_sample, SeifertBox};
use seifert_core::rational::{ceil_i64, floor_i64, Q};
use seifert_core::seifert::ihs_from_alphas;
use seifert_core::{ClassRep, RationalCycle, SeifertData, StarGraph};

use super::{four_leg, gamma70, no1};

/// `0`, `[Z_K]`, `[Z_K + E_0^*]` and `[E_v^*]` for every end vertex.
pub fn classes(g: &StarGraph) -> Vec<ClassRep> {
    let zk = canonical_cycle(g);
    let e0 = dual_cycle(g, CENTER).unwrap();
    let mut out = vec![
        ClassRep::zero(g.vertex_count()),
        ClassRep::of(&zk),
        ClassRep::of(&(&zk + &e0)),
    ];
    for v in g.end_vertices() {
        out.push(ClassRep::of(&dual_cycle(g, v).unwrap()));
    }
    out
}

/// `0 <= l_v <= max(0, ceil(Z_K_v)) + 2`.
pub fn box_bounds(g: &StarGraph) -> Vec<i64> {
    canonical_cycle(g)
        .coeffs()
        .iter()
        .map(|c| ceil_i64(c).max(0) + 2)
        .collect()
}

pub fn box_size(bounds: &[i64]) -> u64 {
    bounds.iter().map(|&b| (b + 1) as u64).product()
}

fn for_each_in_box(
    bounds: &[i64],
    mut f: impl FnMut(&[i64]) -> Result<(), String>,
) -> Result<(), String> {
    let mut l = vec![0i64; bounds.len()];
    loop {
        f(&l)?;
        let mut i = 0;
        loop {
            if i == l.len() {
                return Ok(());
            }
            if l[i] < bounds[i] {
                l[i] += 1;
                break;
            }
            l[i] = 0;
            i += 1;
        }
    }
}

fn int_pairing(g: &StarGraph, l: &[i64], v: usize) -> i64 {
    let mut acc = l[v] * g.euler(v);
    for &u in g.neighbors(v) {
        acc += l[u];
    }
    acc
}

fn offset(x: &RationalCycle, r: &RationalCycle) -> Vec<i64> {
    (x - r)
        .coeffs()
        .iter()
        .map(|c| c.to_integer().to_i64().unwrap())
        .collect()
}

fn shifted(r: &RationalCycle, l: &[i64]) -> RationalCycle {
    let mut c = r.clone();
    for (v, &k) in l.iter().enumerate() {
        c.add_base(v, k);
    }
    c
}

/// Every anti-nef `r_h + l` in the box dominates `s_h`; every
/// `V*`-anti-nef `r_h + l` with `l_0 = k` dominates `x^k` and has
/// `chi >= chi(x^k)`. Returns the number of candidates inspected.
pub fn box_oracle(g: &StarGraph, class: &ClassRep) -> Result<u64, String> {
    let n = g.vertex_count();
    let bounds = box_bounds(g);
    let r = class.representative();
    // floor(-(r, E_v)) is the largest integer (l, E_v) keeping r + l anti-nef at v.
    let caps: Vec<i64> = (0..n)
        .map(|v| floor_i64(&-g.pair_with_base(&r, v)))
        .collect();

    let (s, _) = to_antinef(g, &r).map_err(|e| e.to_string())?;
    let s_off = offset(&s, &r);
    if !s_off.iter().zip(&bounds).all(|(&k, &b)| k < b) {
        return Err(format!("s_h = {s} is not interior to the box"));
    }

    let top = bounds[CENTER] as usize;
    let xs = x_series(g, class, top).map_err(|e| e.to_string())?;
    let x_off: Vec<Vec<i64>> = xs.cycles.iter().map(|x| offset(x, &r)).collect();
    let x_chi: Vec<Q> = xs.cycles.iter().map(|x| chi(g, x).unwrap()).collect();

    let mut count = 0;
    for_each_in_box(&bounds, |l| {
        count += 1;
        let pairs: Vec<i64> = (0..n).map(|v| int_pairing(g, l, v)).collect();
        let off_center_ok = (1..n).all(|v| pairs[v] <= caps[v]);
        if off_center_ok
            && pairs[CENTER] <= caps[CENTER]
            && !l.iter().zip(&s_off).all(|(a, b)| a >= b)
        {
            return Err(format!("anti-nef r_h + {l:?} does not dominate s_h = {s}"));
        }
        let ell = l[CENTER] as usize;
        if off_center_ok && x_off[ell].iter().zip(&bounds).all(|(&k, &b)| k <= b) {
            if !l.iter().zip(&x_off[ell]).all(|(a, b)| a >= b) {
                return Err(format!("V*-anti-nef r_h + {l:?} does not dominate x^{ell}"));
            }
            if chi(g, &shifted(&r, l)).unwrap() < x_chi[ell] {
                return Err(format!("chi(r_h + {l:?}) < chi(x^{ell})"));
            }
        }
        Ok(())
    })?;
    Ok(count)
}

/// The worked examples with at most six vertices plus seeded random graphs
/// of the same size whose box stays small.
pub fn small_graphs() -> Vec<SeifertData> {
    let mut out = vec![
        gamma70(),
        four_leg(),
        no1(),
        ihs_from_alphas(&[2, 3, 7]).unwrap(),
    ];
    let bx = SeifertBox {
        max_alpha: 12,
        max_legs: 4,
        lcm_cap: 500,
    };
    for sf in seifert_sample(11, 400, bx) {
        let g = StarGraph::from_seifert(&sf);
        if g.vertex_count() <= 6 && box_size(&box_bounds(&g)) <= 40_000 && !out.contains(&sf) {
            out.push(sf);
        }
        if out.len() >= 24 {
            break;
        }
    }
    out
}
