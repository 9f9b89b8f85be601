//! JSON reports. Every report carries a `summary` string, which is what
//! `--text` prints.

use serde_json::{json, Value};

use simple_games::classification::{classify, dictator, passers, vetoers, PlayerClassification};
use simple_games::desirability::{
    strict_desirability_ordering, weight_desirability_ordering, DesirabilityOrdering, OrderingVerdict,
};
use simple_games::indices::{
    banzhaf_indices, banzhaf_values, chow_parameters, collectivity_power, deegan_packel_indices_of,
    holler_indices_of, ratio_string, shapley_indices, shapley_values, ChowParameters,
};
use simple_games::realizability::is_wvg_realizable;
use simple_games::representations::{extensive_of, minimal_winning_of, minimize, multi_weighted_of};
use simple_games::{Coalition, Error, Limits, SimpleGame};

use crate::document::{Form, GameDocument};
use crate::{Failure, IndexKind};

const SKIPPED: &str = "skipped: exceeds desk-scale budget";

fn members(c: Coalition) -> Vec<usize> {
    c.players().map(|p| p.index()).collect()
}

fn listing(c: Coalition) -> String {
    if c.is_empty() {
        "none".into()
    } else {
        members(c).iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// `dummies` is `Err` with a note when dummy detection was skipped.
fn types_value(c: &PlayerClassification, dummies: Result<Coalition, String>) -> (Value, String) {
    let (dummy_value, dummy_text) = match dummies {
        Ok(d) => (json!(members(d)), listing(d)),
        Err(note) => (json!(note), note),
    };
    let text = format!(
        "dummies: {dummy_text}; passers: {}; vetoers: {}; dictator: {}",
        listing(c.passers),
        listing(c.vetoers),
        c.dictator.map_or("none".into(), |p| p.to_string()),
    );
    let value = json!({
        "dummies": dummy_value,
        "passers": members(c.passers),
        "vetoers": members(c.vetoers),
        "dictator": c.dictator.map(|p| p.index()),
    });
    (value, text)
}

fn ordering_value(order: &DesirabilityOrdering) -> (Value, String) {
    let text = order.to_string();
    let value = json!({
        "verdict": "linear",
        "classes": order.to_indices(),
        "strict": order.is_strict(),
        "text": text,
    });
    (value, text)
}

fn verdict_value(verdict: &OrderingVerdict) -> (Value, String) {
    match verdict {
        OrderingVerdict::Linear(order) => ordering_value(order),
        OrderingVerdict::NonLinear(i, j) => {
            let text = format!("NO (players {i},{j} incomparable)");
            let value = json!({
                "verdict": "NO",
                "incomparable": [i.index(), j.index()],
                "text": text,
            });
            (value, text)
        }
    }
}

fn chow_value(c: &ChowParameters) -> Value {
    json!({
        "per_player": c.per_player.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "total": c.total.to_string(),
    })
}

fn skipped(e: &Error) -> String {
    if e.is_budget() {
        SKIPPED.into()
    } else {
        format!("skipped: {e}")
    }
}

/// Runs `f`, turning errors into a "skipped" entry.
fn section<T>(r: simple_games::Result<T>, render: impl FnOnce(T) -> (Value, String)) -> (Value, String) {
    match r {
        Ok(v) => render(v),
        Err(e) => {
            let s = skipped(&e);
            (Value::String(s.clone()), s)
        }
    }
}

pub fn analyze(game: &SimpleGame, l: &Limits) -> Value {
    let types = match classify(game, l) {
        Ok(c) => types_value(&c, Ok(c.dummies)),
        Err(e) => {
            // Only dummy detection can run out of budget.
            let c = PlayerClassification {
                dummies: Coalition::EMPTY,
                passers: passers(game),
                vetoers: vetoers(game),
                dictator: dictator(game),
            };
            types_value(&c, Err(skipped(&e)))
        }
    };

    let (linear, ordering) = match game {
        SimpleGame::Weighted(w) => (
            (json!(true), "yes".to_string()),
            ordering_value(&weight_desirability_ordering(w)),
        ),
        _ => match minimal_winning_of(game, l).map(|m| strict_desirability_ordering(&m)) {
            Ok(verdict) => {
                let yes = verdict.is_linear();
                ((json!(yes), if yes { "yes" } else { "no" }.to_string()), verdict_value(&verdict))
            }
            Err(e) => {
                let s = skipped(&e);
                ((json!(s), s.clone()), (json!(s), s))
            }
        },
    };

    let vector = |v: simple_games::indices::IndexVector| (json!(v.to_strings()), v.to_string());
    let banzhaf = section(banzhaf_indices(game, l), vector);
    let shapley = section(shapley_indices(game, l), vector);
    let holler = section(holler_indices_of(game, l), vector);
    let deegan_packel = section(deegan_packel_indices_of(game, l), vector);
    let chow = section(chow_parameters(game, l), |c| (chow_value(&c), c.to_string()));
    let collectivity = section(collectivity_power(game, l), |r| {
        let s = ratio_string(&r);
        (json!(s), s)
    });

    let summary = [
        format!("players: {} ({})", game.n(), game.form_name()),
        format!("types: {}", types.1),
        format!("linear: {}", linear.1),
        format!("ordering: {}", ordering.1),
        format!("banzhaf: {}", banzhaf.1),
        format!("shapley: {}", shapley.1),
        format!("holler: {}", holler.1),
        format!("deegan-packel: {}", deegan_packel.1),
        format!("chow: {}", chow.1),
        format!("collectivity: {}", collectivity.1),
    ]
    .join("\n");

    json!({
        "players": game.n(),
        "form": game.form_name(),
        "types": types.0,
        "linear": linear.0,
        "ordering": ordering.0,
        "banzhaf": banzhaf.0,
        "shapley": shapley.0,
        "holler": holler.0,
        "deegan_packel": deegan_packel.0,
        "chow": chow.0,
        "collectivity": collectivity.0,
        "summary": summary,
    })
}

pub fn indices(game: &SimpleGame, kind: IndexKind, l: &Limits) -> Result<Value, Failure> {
    let strings = |v: Vec<num_bigint::BigUint>| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    Ok(match kind {
        IndexKind::Banzhaf => {
            let v = banzhaf_indices(game, l)?;
            json!({
                "index": "banzhaf",
                "values": v.to_strings(),
                "raw": strings(banzhaf_values(game, l)?),
                "summary": v.to_string(),
            })
        }
        IndexKind::Shapley => {
            let v = shapley_indices(game, l)?;
            json!({
                "index": "shapley",
                "values": v.to_strings(),
                "raw": strings(shapley_values(game, l)?),
                "summary": v.to_string(),
            })
        }
        IndexKind::Holler => {
            let v = holler_indices_of(game, l)?;
            json!({ "index": "holler", "values": v.to_strings(), "summary": v.to_string() })
        }
        IndexKind::DeeganPackel => {
            let v = deegan_packel_indices_of(game, l)?;
            json!({ "index": "deegan_packel", "values": v.to_strings(), "summary": v.to_string() })
        }
        IndexKind::Chow => {
            let c = chow_parameters(game, l)?;
            let mut value = chow_value(&c);
            value["index"] = json!("chow");
            value["summary"] = json!(c.to_string());
            value
        }
        IndexKind::Collectivity => {
            let s = ratio_string(&collectivity_power(game, l)?);
            json!({ "index": "collectivity", "value": s, "summary": s })
        }
    })
}

pub fn ordering(game: &SimpleGame, l: &Limits) -> Result<Value, Failure> {
    let verdict = strict_desirability_ordering(&minimal_winning_of(game, l)?);
    let (mut value, text) = verdict_value(&verdict);
    value["linear"] = json!(verdict.is_linear());
    value["summary"] = json!(text);
    Ok(value)
}

pub fn types(game: &SimpleGame, l: &Limits) -> Result<Value, Failure> {
    let c = classify(game, l)?;
    let (mut value, text) = types_value(&c, Ok(c.dummies));
    value["summary"] = json!(text);
    Ok(value)
}

pub fn realizable(game: &SimpleGame, l: &Limits) -> Result<Value, Failure> {
    let r = is_wvg_realizable(game, l)?;
    let summary = match (&r.witness, r.certificate) {
        (Some(w), _) => format!("yes {w}"),
        (None, Some((i, j))) => format!("no (players {i},{j} incomparable)"),
        (None, None) => "no (linear, but no weights satisfy the inequalities)".into(),
    };
    let witness = r.witness.map(|w| {
        serde_json::to_value(GameDocument::from_game(&w.into())).expect("documents serialize")
    });
    Ok(json!({
        "realizable": r.realizable,
        "witness": witness,
        "certificate": r.certificate.map(|(i, j)| [i.index(), j.index()]),
        "summary": summary,
    }))
}

pub fn convert(game: &SimpleGame, to: Form, l: &Limits) -> Result<GameDocument, Failure> {
    let out: SimpleGame = match to {
        Form::Winning => extensive_of(game, l)?.into(),
        Form::MinimalWinning => minimal_winning_of(game, l)?.into(),
        Form::MultiWeighted => multi_weighted_of(game, l)?.into(),
        Form::Weighted => {
            let r = is_wvg_realizable(game, l)?;
            match (r.witness, r.certificate) {
                (Some(w), _) => w.into(),
                (None, Some((i, j))) => {
                    return Err(Failure::Precondition(format!(
                        "not a weighted game: players {i},{j} are incomparable"
                    )))
                }
                (None, None) => {
                    return Err(Failure::Precondition(
                        "not a weighted game: no weights satisfy the inequalities".into(),
                    ))
                }
            }
        }
    };
    Ok(GameDocument::from_game(&out))
}

pub fn dual(game: &SimpleGame, l: &Limits) -> Result<GameDocument, Failure> {
    let d = minimize(&simple_games::representations::dual(game, l)?);
    Ok(GameDocument::from_game(&d.into()))
}
