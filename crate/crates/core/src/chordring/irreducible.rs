//! Exhaustive factor search over the integers.
//!
//! A factor `h` of degree `k` of an integer polynomial `p` takes values at
//! integer nodes that divide the values of `p`. Candidates are built node by
//! node in Newton form; every divided difference of an integer polynomial at
//! integer nodes is an integer, which prunes most branches early.

use super::poly::IntPoly;
use super::ChordError;

pub const MAX_DEGREE: usize = 16;

const NODE_RANGE: i64 = 12;
const VALUE_LIMIT: i128 = 1_000_000_000_000;

fn divisors(v: i128) -> Vec<i128> {
    let v = v.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1i128;
    while d * d <= v {
        if v % d == 0 {
            small.push(d);
            if d * d != v {
                large.push(v / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

struct Node {
    at: i128,
    choices: Vec<i128>,
}

/// Nodes where `p` is nonzero and small, fewest divisor choices first.
/// A node where `p` vanishes is returned as `Err(root)`.
fn pick_nodes(p: &IntPoly) -> Result<Vec<Node>, i64> {
    let mut nodes = Vec::new();
    for a in -NODE_RANGE..=NODE_RANGE {
        let v = p.eval_i128(a as i128);
        if v == 0 {
            return Err(a);
        }
        if v.abs() > VALUE_LIMIT {
            continue;
        }
        let ds = divisors(v);
        let choices = ds.iter().flat_map(|&d| [d, -d]).collect();
        nodes.push(Node { at: a as i128, choices });
    }
    nodes.sort_by_key(|n| (n.choices.len(), n.at.abs()));
    Ok(nodes)
}

/// Newton form to power-basis coefficients.
fn newton_to_power(nodes: &[i128], dd: &[i128]) -> Vec<i128> {
    let mut poly = vec![0i128];
    for k in (0..dd.len()).rev() {
        // poly = poly * (x - nodes[k]) + dd[k]
        let mut next = vec![0i128; poly.len() + 1];
        for (i, &c) in poly.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * nodes[k];
        }
        next[0] += dd[k];
        poly = next;
    }
    poly
}

fn search(
    p: &IntPoly,
    nodes: &[Node],
    k: usize,
    chosen: &mut Vec<i128>,
    table: &mut Vec<Vec<i128>>,
) -> Option<IntPoly> {
    let level = chosen.len();
    if level == k + 1 {
        let lead = table[k][0];
        if lead <= 0 || (p.leading() as i128) % lead != 0 {
            return None;
        }
        let xs: Vec<i128> = nodes[..=k].iter().map(|n| n.at).collect();
        let dd: Vec<i128> = (0..=k).map(|j| table[j][0]).collect();
        let coeffs = newton_to_power(&xs, &dd);
        let coeffs: Option<Vec<i64>> = coeffs.iter().map(|&c| i64::try_from(c).ok()).collect();
        let h = IntPoly::new(coeffs?);
        return (h.degree() == Some(k) && p.divisible_by(&h)).then_some(h);
    }
    for &v in &nodes[level].choices {
        // extend the divided-difference table with the new value
        let mut col = vec![v];
        let mut ok = true;
        for j in 1..=level {
            let num = col[j - 1] - table[j - 1][level - j];
            let den = nodes[level].at - nodes[level - j].at;
            if num % den != 0 {
                ok = false;
                break;
            }
            col.push(num / den);
        }
        if !ok {
            continue;
        }
        for (j, c) in col.iter().enumerate() {
            table[j].push(*c);
        }
        chosen.push(v);
        let found = search(p, nodes, k, chosen, table);
        chosen.pop();
        for t in table.iter_mut().take(level + 1) {
            t.pop();
        }
        if found.is_some() {
            return found;
        }
    }
    None
}

/// A nontrivial factor of smallest degree, if any.
fn find_factor(p: &IntPoly) -> Result<Option<IntPoly>, ChordError> {
    let d = p.degree().unwrap_or(0);
    if d > MAX_DEGREE {
        return Err(ChordError::DegreeTooLarge(d));
    }
    if d <= 1 {
        return Ok(None);
    }
    let nodes = match pick_nodes(p) {
        Ok(n) => n,
        Err(root) => return Ok(Some(IntPoly::new(vec![-root, 1]))),
    };
    for k in 1..=d / 2 {
        if nodes.len() < k + 1 {
            return Err(ChordError::DegreeTooLarge(d));
        }
        // table[j] holds divided differences of order j, indexed by start node
        let mut table: Vec<Vec<i128>> = vec![Vec::new(); k + 1];
        if let Some(h) = search(p, &nodes, k, &mut Vec::new(), &mut table) {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

/// Irreducibility over the rationals. Constants are not irreducible.
pub fn is_irreducible(p: &IntPoly) -> Result<bool, ChordError> {
    let prim = p.primitive();
    match prim.degree() {
        None | Some(0) => Ok(false),
        _ => Ok(find_factor(&prim)?.is_none()),
    }
}

/// Irreducible primitive factors with positive leading coefficients, listed
/// by nondecreasing degree; the content is dropped.
pub fn factor(p: &IntPoly) -> Result<Vec<IntPoly>, ChordError> {
    let mut out = Vec::new();
    let mut rest = p.primitive();
    if rest.degree().unwrap_or(0) > MAX_DEGREE {
        return Err(ChordError::DegreeTooLarge(rest.degree().unwrap()));
    }
    while rest.degree().unwrap_or(0) >= 1 {
        match find_factor(&rest)? {
            Some(h) => {
                let (q, r) = rest.divrem_exact_lead(&h).expect("found factor divides");
                debug_assert!(r.is_zero());
                out.push(h);
                rest = q.primitive();
            }
            None => {
                out.push(rest);
                break;
            }
        }
    }
    out.sort_by_key(|f| (f.degree(), f.coeffs().to_vec()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordring::{cheb, ChebKind};

    #[test]
    fn golden_modulus_irreducible() {
        assert!(is_irreducible(&cheb(ChebKind::OddModulus, 2).unwrap()).unwrap());
    }

    #[test]
    fn q4_factors() {
        let f = factor(&cheb(ChebKind::OddModulus, 4).unwrap()).unwrap();
        let shown: Vec<String> = f.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["x - 1", "x^3 - 3x - 1"]);
    }

    #[test]
    fn non_monic_split() {
        // (2x + 1)(3x^2 - 2)
        let p = IntPoly::new(vec![-2, -4, 3, 6]);
        let f = factor(&p).unwrap();
        assert_eq!(f.len(), 2);
        assert!(!is_irreducible(&p).unwrap());
        assert!(is_irreducible(&IntPoly::new(vec![1, 0, 1])).unwrap());
    }

    #[test]
    fn degree_limit() {
        assert!(matches!(
            is_irreducible(&IntPoly::monomial(1, 17)),
            Err(ChordError::DegreeTooLarge(17))
        ));
    }
}
