//! Folds over subsets of non-adjacent positions.
//!
//! Both the min-plus conserved quantities and the determinantal divisors of a
//! bidiagonal matrix are of the form "combine, over all `l`-subsets of the
//! interleaved sequence with no two neighbours, the product of the chosen
//! entries". The same dynamic program serves `(+, min)` and `(×, gcd)`.

/// Returns `out[l - 1]` for `l = 1..=max_count`: the `plus`-fold over every
/// `l`-subset of pairwise non-adjacent positions of the `times`-product of the
/// chosen entries, or `None` when no such subset exists.
pub(crate) fn nonadjacent_fold<T, M, P>(
    w: &[T],
    max_count: usize,
    one: T,
    times: M,
    plus: P,
) -> Vec<Option<T>>
where
    T: Clone,
    M: Fn(&T, &T) -> T,
    P: Fn(&T, &T) -> T,
{
    let mut init = vec![None; max_count + 1];
    init[0] = Some(one);
    // best over the prefix ending two positions back / one position back
    let mut before = init.clone();
    let mut last = init;
    for x in w {
        let mut cur = last.clone();
        for l in 1..=max_count {
            let take = before[l - 1].as_ref().map(|b| times(b, x));
            cur[l] = match (cur[l].take(), take) {
                (Some(a), Some(b)) => Some(plus(&a, &b)),
                (a, b) => a.or(b),
            };
        }
        before = std::mem::replace(&mut last, cur);
    }
    last.into_iter().skip(1).collect()
}
