//! Relative rank error between exact and approximate scores.

use crate::exact::BcScores;
use crate::graph::NodeId;

/// 1-based ranks by descending score; ties go to the lower node index.
pub fn ranks(scores: &BcScores) -> Vec<usize> {
    let mut order: Vec<NodeId> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    let mut rank = vec![0; scores.len()];
    for (i, v) in order.into_iter().enumerate() {
        rank[v] = i + 1;
    }
    rank
}

/// `max(rho, 1/rho)` per node, where `rho` is the estimated rank over the
/// true rank. With `top_k`, only the `k` best nodes by exact rank are
/// returned, ordered by exact rank.
pub fn rank_error(exact: &BcScores, approx: &BcScores, top_k: Option<usize>) -> Vec<(NodeId, f64)> {
    assert_eq!(exact.len(), approx.len(), "score vectors cover different node sets");
    let true_rank = ranks(exact);
    let est_rank = ranks(approx);
    let mut out: Vec<(NodeId, f64)> = (0..exact.len())
        .map(|v| {
            let rho = est_rank[v] as f64 / true_rank[v] as f64;
            (v, rho.max(1.0 / rho))
        })
        .collect();
    if let Some(k) = top_k {
        out.sort_by_key(|&(v, _)| true_rank[v]);
        out.truncate(k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_scores_give_one() {
        let s = BcScores(vec![0.3, 0.1, 0.2, 0.0]);
        assert!(rank_error(&s, &s, None).iter().all(|&(_, e)| e == 1.0));
    }

    #[test]
    fn symmetric_ratio() {
        let exact = BcScores((0..10).map(|i| 1.0 - i as f64 * 0.05).collect());
        // node 1 (true rank 2) drops to rank 4
        let mut a = exact.0.clone();
        a[1] = 0.84;
        let errs = rank_error(&exact, &BcScores(a), None);
        assert_eq!(errs[1].1, 2.0);
        // node 9 (true rank 10) climbs to rank 5
        let mut b = exact.0.clone();
        b[9] = 0.81;
        let errs = rank_error(&exact, &BcScores(b), None);
        assert_eq!(errs[9].1, 2.0);
    }

    #[test]
    fn ties_by_index_and_top_k() {
        let s = BcScores(vec![0.0, 0.5, 0.0, 0.5]);
        assert_eq!(ranks(&s), vec![3, 1, 4, 2]);
        let top = rank_error(&s, &s, Some(2));
        assert_eq!(top.iter().map(|&(v, _)| v).collect::<Vec<_>>(), vec![1, 3]);
    }
}
