use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::One;

use crate::exactmath::IntPolynomial;
use crate::graph::Graph;

type Key = (usize, Vec<(usize, usize)>);

/// Chromatic polynomial by deletion–contraction, memoized on the labelled
/// edge set. Parallel edges created by contraction are collapsed.
pub fn chromatic_polynomial(graph: &Graph) -> IntPolynomial {
    let mut memo = HashMap::new();
    let edges: Vec<(usize, usize)> = graph.edges().collect();
    delete_contract(graph.vertex_count(), edges, &mut memo)
}

fn delete_contract(k: usize, edges: Vec<(usize, usize)>, memo: &mut HashMap<Key, IntPolynomial>) -> IntPolynomial {
    let Some(&(a, b)) = edges.last() else {
        return IntPolynomial::monomial(BigInt::one(), k);
    };
    let key = (k, edges);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let rest = &key.1[..key.1.len() - 1];

    let deleted = delete_contract(k, rest.to_vec(), memo);

    // Merge b into a and shift the labels above b down by one.
    let relabel = |v: usize| {
        let v = if v == b { a } else { v };
        if v > b {
            v - 1
        } else {
            v
        }
    };
    let contracted_edges: BTreeSet<(usize, usize)> = rest
        .iter()
        .map(|&(u, w)| {
            let (u, w) = (relabel(u), relabel(w));
            (u.min(w), u.max(w))
        })
        .collect();
    let contracted = delete_contract(k - 1, contracted_edges.into_iter().collect(), memo);

    let p = deleted - contracted;
    memo.insert(key, p.clone());
    p
}
