//! Acceptance checks. Each check prints one PASS/FAIL line with its runtime
//! and budget; the process exits non-zero if any check fails.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::Truth;
use simple_games::classification::classify;
use simple_games::desirability::{
    compare_players, is_linear, ordering_from_pairwise, strict_desirability_ordering,
    DesirabilityRelation, OrderingVerdict,
};
use simple_games::indices::{
    banzhaf_indices, banzhaf_values, chow_parameters, count_winning, deegan_packel_indices_of,
    holler_indices_of, shapley_indices,
};
use simple_games::random::{planted_incomparable, random_minimal, random_multi_weighted, random_weighted};
use simple_games::realizability::is_wvg_realizable;
use simple_games::reductions::{
    augment_with_pivot, count_vertex_covers, crossed_weights_example, graph_to_minimal_form,
    partition_to_mwvg, zero_weight_extension, Graph, PartitionInstance,
};
use simple_games::representations::{dual, expand, extensive_of, minimal_winning_of, minimize, weighted_minimal};
use simple_games::{enumerate_winning, Coalition, Limits, MinimalWinningForm, PlayerId, SimpleGame, WeightedForm};

type Check = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn limits() -> Limits {
    Limits::default()
}

fn player(i: usize) -> PlayerId {
    PlayerId::new(i).unwrap()
}

fn crossed_weights_game() -> Check {
    let g: SimpleGame = crossed_weights_example().into();
    let l = limits();
    let rel = compare_players(&g, player(1), player(2), &l).map_err(|e| e.to_string())?;
    ensure(rel == DesirabilityRelation::Incomparable, || format!("players 1, 2: {rel:?}"))?;
    ensure(!is_linear(&g, &l).unwrap(), || "reported linear".into())?;
    let m = minimize(&expand(&minimize(&extensive_of(&g, &l).unwrap()), &l).unwrap());
    let verdict = strict_desirability_ordering(&m);
    ensure(!verdict.is_linear(), || format!("ordering returned {verdict:?}"))?;
    Ok(format!("W^m = {:?}, ordering NO", m.minimal()))
}

fn small_games_are_linear() -> Check {
    let mut games = 0;
    for n in 1..=3 {
        for family in common::all_antichains(n) {
            let m = MinimalWinningForm::new(n, family).unwrap();
            ensure(strict_desirability_ordering(&m).is_linear(), || format!("{:?}", m.minimal()))?;
            ensure(is_linear(&m.clone().into(), &limits()).unwrap(), || format!("{:?}", m.minimal()))?;
            games += 1;
        }
    }
    Ok(format!("{games} monotone games on 1..=3 players"))
}

/// Non-decreasing sequences only: reordering the `a_i` relabels players
/// and leaves linearity unchanged.
fn multisets(k: usize, max: u64, out: &mut Vec<Vec<u64>>, cur: &mut Vec<u64>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    let lo = cur.last().copied().unwrap_or(1);
    for a in lo..=max {
        cur.push(a);
        multisets(k, max, out, cur);
        cur.pop();
    }
}

fn partition_equivalence() -> Check {
    let (mut yes, mut no) = (0, 0);
    for k in 1..=8 {
        let mut all = Vec::new();
        multisets(k, 6, &mut all, &mut Vec::new());
        for a in all {
            if a.iter().sum::<u64>() % 2 == 1 {
                continue;
            }
            let g: SimpleGame = partition_to_mwvg(&PartitionInstance::new(a.clone()).unwrap())
                .map_err(|e| e.to_string())?
                .into();
            let split = common::has_equal_split(&a);
            let nonlinear = !is_linear(&g, &limits()).map_err(|e| e.to_string())?;
            ensure(split == nonlinear, || format!("{a:?}: split {split}, non-linear {nonlinear}"))?;
            if split {
                yes += 1;
            } else {
                no += 1;
            }
        }
    }
    Ok(format!("{yes} yes and {no} no instances"))
}

fn vertex_cover_identities() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let l = limits();
    for _ in 0..200 {
        let n = rng.random_range(2..=10);
        let p = rng.random_range(0.1..0.9);
        let mut edges = common::random_edges(&mut rng, n, p);
        if edges.is_empty() {
            edges.push((1, 2));
        }
        let graph = Graph::new(n, edges).unwrap();
        let m = graph_to_minimal_form(&graph).unwrap();
        let winning = count_winning(&m.clone().into(), &l).unwrap();
        let covers = count_vertex_covers(&graph, &l).unwrap();
        ensure(&winning + &covers == BigUint::from(1u64 << n), || format!("{graph:?}"))?;
        ensure(winning == BigUint::from(Truth::of(&m.clone().into()).count()), || format!("{graph:?}"))?;
        let eta = banzhaf_values(&augment_with_pivot(&m).unwrap().into(), &l).unwrap();
        ensure(eta[n] == winning, || format!("pivot on {graph:?}"))?;
    }
    Ok("200 graphs".into())
}

fn zero_weight_identity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let n = rng.random_range(1..=10);
        let w = random_weighted(&mut rng, n, 9);
        let chow = chow_parameters(&zero_weight_extension(&w).unwrap().into(), &limits()).unwrap();
        let expected = BigUint::from(Truth::of(&w.clone().into()).count());
        ensure(chow.per_player[n] == expected, || format!("{w}"))?;
    }
    Ok("200 weighted games".into())
}

fn ordering_against_pairwise() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let l = limits();
    for _ in 0..500 {
        let n = rng.random_range(1..=10);
        let w = random_weighted(&mut rng, n, 9);
        let g: SimpleGame = w.clone().into();
        let m = weighted_minimal(&w, &l).unwrap();
        let pairwise = ordering_from_pairwise(n, |i, j| compare_players(&g, i, j, &l).unwrap());
        match strict_desirability_ordering(&m) {
            OrderingVerdict::Linear(order) => {
                ensure(Some(&order) == pairwise.as_ref(), || format!("{w}: {order} vs {pairwise:?}"))?
            }
            OrderingVerdict::NonLinear(i, j) => return Err(format!("{w}: NO with {i}, {j}")),
        }
    }
    for _ in 0..500 {
        let n = rng.random_range(4..=10);
        let (m, i, j) = planted_incomparable(&mut rng, n, 5);
        match strict_desirability_ordering(&m) {
            OrderingVerdict::NonLinear(..) => {}
            OrderingVerdict::Linear(order) => {
                return Err(format!("{:?} with planted {i}, {j}: got {order}", m.minimal()))
            }
        }
    }
    Ok("500 linear, 500 planted".into())
}

fn index_backends_agree() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let l = limits();
    for _ in 0..200 {
        let n = rng.random_range(1..=12);
        let w = random_weighted(&mut rng, n, 9);
        let as_wvg: SimpleGame = w.clone().into();
        let as_list: SimpleGame = extensive_of(&as_wvg, &l).unwrap().into();
        let as_min: SimpleGame = minimize(&extensive_of(&as_wvg, &l).unwrap()).into();
        let all = |g: &SimpleGame| {
            (
                banzhaf_indices(g, &l).unwrap(),
                shapley_indices(g, &l).unwrap(),
                holler_indices_of(g, &l).unwrap(),
                deegan_packel_indices_of(g, &l).unwrap(),
                chow_parameters(g, &l).unwrap(),
            )
        };
        let reference = all(&as_wvg);
        ensure(all(&as_list) == reference, || format!("{w}: listing differs"))?;
        ensure(all(&as_min) == reference, || format!("{w}: minimal form differs"))?;
        let (b, s, h, d, _) = &reference;
        for v in [b, s, h, d] {
            ensure(v.sum().is_one(), || format!("{w}: {v} does not sum to 1"))?;
        }
    }
    Ok("200 weighted games, three representations each".into())
}

fn player_types_against_definition() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let l = limits();
    let mut games: Vec<SimpleGame> = Vec::new();
    for _ in 0..200 {
        let n = rng.random_range(1..=10);
        games.push(random_weighted(&mut rng, n, 9).into());
        games.push(random_minimal(&mut rng, n, 6).into());
        games.push(expand(&random_minimal(&mut rng, n, 6), &l).unwrap().into());
        let parts = rng.random_range(1..=3);
        games.push(random_multi_weighted(&mut rng, n, parts, 9).into());
    }
    for g in &games {
        let t = Truth::of(g);
        let c = classify(g, &l).unwrap();
        ensure(c.dummies == t.players_where(|b| t.is_dummy(b)), || format!("dummies of {g:?}"))?;
        ensure(c.passers == t.players_where(|b| t.is_passer(b)), || format!("passers of {g:?}"))?;
        ensure(c.vetoers == t.players_where(|b| t.is_vetoer(b)), || format!("vetoers of {g:?}"))?;
        let dictator = c.dictator.map(Coalition::singleton).unwrap_or(Coalition::EMPTY);
        ensure(dictator == t.players_where(|b| t.is_dictator(b)), || format!("dictator of {g:?}"))?;
    }
    Ok(format!("{} games, 200 per representation", games.len()))
}

fn realizability_soundness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let l = limits();
    for _ in 0..100 {
        let n = rng.random_range(1..=8);
        let w = random_weighted(&mut rng, n, 9);
        let m: SimpleGame = minimal_winning_of(&w.clone().into(), &l).unwrap().into();
        let r = is_wvg_realizable(&m, &l).unwrap();
        let witness = r.witness.ok_or_else(|| format!("{w}: no witness"))?;
        ensure(r.realizable, || format!("{w}: not realizable"))?;
        let same = enumerate_winning(&witness.clone().into(), &l).unwrap() == enumerate_winning(&m, &l).unwrap();
        ensure(same, || format!("{w}: witness {witness} differs"))?;
    }
    let r = is_wvg_realizable(&crossed_weights_example().into(), &l).unwrap();
    ensure(!r.realizable && r.certificate == Some((player(1), player(2))), || format!("{r:?}"))?;
    Ok("100 weighted sources; crossed example certified by (1,2)".into())
}

fn round_trips() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let l = limits();
    for _ in 0..200 {
        let n = rng.random_range(1..=10);
        let m = random_minimal(&mut rng, n, 8);
        ensure(minimize(&expand(&m, &l).unwrap()) == m, || format!("{:?}", m.minimal()))?;
        let g: SimpleGame = match rng.random_range(0..4) {
            0 => random_weighted(&mut rng, n, 9).into(),
            1 => m.clone().into(),
            2 => expand(&m, &l).unwrap().into(),
            _ => random_multi_weighted(&mut rng, n, 2, 9).into(),
        };
        let twice = dual(&dual(&g, &l).unwrap().into(), &l).unwrap();
        ensure(twice.winning() == enumerate_winning(&g, &l).unwrap(), || format!("dual of {g:?}"))?;
    }
    Ok("200 minimal forms, 200 mixed games".into())
}

/// `[14; 6 (x22), 3 (x18), 1 (x5), 0 (x5)]` has exactly 100 000 minimal
/// winning coalitions, counted by the lightest-member recurrence.
fn large_ordering() -> Check {
    let weights: Vec<u64> = [(6, 22), (3, 18), (1, 5), (0, 5)]
        .iter()
        .flat_map(|&(w, k)| std::iter::repeat_n(w, k))
        .collect();
    let wvg = WeightedForm::from_u64(14, &weights).unwrap();
    let built = Instant::now();
    let m = weighted_minimal(&wvg, &limits()).map_err(|e| e.to_string())?;
    let build_time = built.elapsed();
    ensure(m.n() == 50 && m.minimal().len() == 100_000, || format!("{} coalitions", m.minimal().len()))?;
    let start = Instant::now();
    let verdict = strict_desirability_ordering(&m);
    let took = start.elapsed();
    let order = verdict.ordering().ok_or("reported NO on a weighted game")?;
    ensure(order.classes().len() == 4, || format!("classes {order}"))?;
    ensure(took < Duration::from_secs(5), || format!("ordering took {took:?}"))?;
    Ok(format!(
        "n = 50, |W^m| = 100000, ordering {:.2?} (coalitions built in {:.2?})",
        took, build_time
    ))
}

fn main() {
    let checks: [(&str, u64, fn() -> Check); 11] = [
        ("crossed-weights example is non-linear", 1, crossed_weights_game),
        ("every game on at most 3 players is linear", 1, small_games_are_linear),
        ("partition gadget is non-linear iff an equal split exists", 30, partition_equivalence),
        ("vertex-cover and pivot counting identities", 30, vertex_cover_identities),
        ("zero-weight player's Chow parameter is |W|", 10, zero_weight_identity),
        ("profile ordering vs pairwise comparison", 60, ordering_against_pairwise),
        ("indices agree across representations", 60, index_backends_agree),
        ("player types vs definitions", 30, player_types_against_definition),
        ("realizability soundness", 60, realizability_soundness),
        ("minimize/expand and dual/dual round trips", 10, round_trips),
        ("ordering on 50 players and 100000 coalitions", 5, large_ordering),
    ];
    let mut failed = 0;
    for (k, (name, budget, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*budget);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the {budget} s budget")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {status} {name} [{:.2?} / {budget} s] {detail}", k + 1, took);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all {} criteria passed", checks.len());
}
