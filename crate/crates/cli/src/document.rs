//! JSON game documents.
//!
//! ```json
//! {"players": 3, "form": "weighted", "quota": 3, "weights": [2, 1, 1]}
//! {"players": 3, "form": "minimal_winning", "coalitions": [[1, 2], [1, 3]]}
//! ```
//!
//! Quotas and weights may be JSON integers or decimal strings; they are
//! written back as integers when they fit in 53 bits and as strings
//! otherwise.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use simple_games::{
    validate, Coalition, ExtensiveWinningForm, MinimalWinningForm, MultiWeightedForm, SimpleGame,
    WeightedForm,
};

use crate::Failure;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Form {
    Winning,
    MinimalWinning,
    Weighted,
    MultiWeighted,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum Number {
    Int(u64),
    Text(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Component {
    quota: Number,
    weights: Vec<Number>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameDocument {
    players: usize,
    form: Form,
    #[serde(skip_serializing_if = "Option::is_none")]
    coalitions: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    quota: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<Vec<Number>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    games: Option<Vec<Component>>,
}

fn parse_number(v: &Number) -> Result<BigUint, Failure> {
    match v {
        Number::Int(i) => Ok(BigUint::from(*i)),
        Number::Text(s) => s
            .parse()
            .map_err(|_| Failure::Parse(format!("not a non-negative integer: {s:?}"))),
    }
}

fn number(v: &BigUint) -> Number {
    match u64::try_from(v) {
        Ok(i) if i < 1 << 53 => Number::Int(i),
        _ => Number::Text(v.to_string()),
    }
}

fn weighted(quota: &Number, weights: &[Number]) -> Result<WeightedForm, Failure> {
    let q = parse_number(quota)?;
    let w = weights.iter().map(parse_number).collect::<Result<Vec<_>, _>>()?;
    WeightedForm::new(q, w).map_err(|e| Failure::Validation(e.to_string()))
}

fn coalition(members: &[usize], players: usize) -> Result<Coalition, Failure> {
    if members.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Failure::Validation(format!(
            "coalition {members:?} must list players in strictly ascending order"
        )));
    }
    if let Some(&bad) = members.iter().find(|&&p| p == 0 || p > players) {
        return Err(Failure::Validation(format!(
            "player {bad} is out of range 1..={players}"
        )));
    }
    Coalition::try_from_indices(members.iter().copied()).map_err(|e| Failure::Validation(e.to_string()))
}

impl GameDocument {
    pub fn parse(text: &str) -> Result<GameDocument, Failure> {
        let value: Value = serde_json::from_str(text).map_err(|e| Failure::Parse(e.to_string()))?;
        let doc: GameDocument = serde_json::from_value(value).map_err(|e| Failure::Parse(e.to_string()))?;
        let needs = match doc.form {
            Form::Winning | Form::MinimalWinning => [true, false, false, false],
            Form::Weighted => [false, true, true, false],
            Form::MultiWeighted => [false, false, false, true],
        };
        let has = [
            doc.coalitions.is_some(),
            doc.quota.is_some(),
            doc.weights.is_some(),
            doc.games.is_some(),
        ];
        for ((name, need), have) in ["coalitions", "quota", "weights", "games"].iter().zip(needs).zip(has) {
            if need && !have {
                return Err(Failure::Parse(format!("form {:?} needs field {name:?}", doc.form)));
            }
            if have && !need {
                return Err(Failure::Parse(format!("form {:?} does not take field {name:?}", doc.form)));
            }
        }
        Ok(doc)
    }

    /// Builds the game and checks the game axioms.
    pub fn to_game(&self) -> Result<SimpleGame, Failure> {
        let n = self.players;
        let invalid = |e: simple_games::Error| Failure::Validation(e.to_string());
        let list = || -> Result<Vec<Coalition>, Failure> {
            let sets = self.coalitions.as_deref().unwrap_or_default();
            let parsed = sets.iter().map(|s| coalition(s, n)).collect::<Result<Vec<_>, _>>()?;
            let mut sorted = parsed.clone();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != parsed.len() {
                return Err(Failure::Validation("a coalition is listed twice".into()));
            }
            Ok(parsed)
        };
        let game: SimpleGame = match self.form {
            Form::Winning => ExtensiveWinningForm::new(n, list()?).map_err(invalid)?.into(),
            Form::MinimalWinning => MinimalWinningForm::new(n, list()?).map_err(invalid)?.into(),
            Form::Weighted => {
                let w = weighted(self.quota.as_ref().unwrap(), self.weights.as_deref().unwrap())?;
                if w.n() != n {
                    return Err(Failure::Validation(format!("{} weights for {n} players", w.n())));
                }
                w.into()
            }
            Form::MultiWeighted => {
                let parts = self
                    .games
                    .as_deref()
                    .unwrap()
                    .iter()
                    .map(|c| weighted(&c.quota, &c.weights))
                    .collect::<Result<Vec<_>, _>>()?;
                if let Some(bad) = parts.iter().find(|w| w.n() != n) {
                    return Err(Failure::Validation(format!("{} weights for {n} players", bad.n())));
                }
                MultiWeightedForm::new(parts).map_err(invalid)?.into()
            }
        };
        let report = validate(&game);
        if let Some(v) = report.violations.first() {
            return Err(Failure::Validation(v.to_string()));
        }
        Ok(game)
    }

    pub fn from_game(game: &SimpleGame) -> GameDocument {
        let lists = |sets: &[Coalition]| -> Vec<Vec<usize>> {
            sets.iter().map(|s| s.players().map(|p| p.index()).collect()).collect()
        };
        let component = |w: &WeightedForm| Component {
            quota: number(w.quota()),
            weights: w.weights().iter().map(number).collect(),
        };
        let mut doc = GameDocument {
            players: game.n(),
            form: Form::Winning,
            coalitions: None,
            quota: None,
            weights: None,
            games: None,
        };
        match game {
            SimpleGame::Winning(g) => doc.coalitions = Some(lists(g.winning())),
            SimpleGame::MinimalWinning(g) => {
                doc.form = Form::MinimalWinning;
                doc.coalitions = Some(lists(g.minimal()));
            }
            SimpleGame::Weighted(w) => {
                let c = component(w);
                doc.form = Form::Weighted;
                doc.quota = Some(c.quota);
                doc.weights = Some(c.weights);
            }
            SimpleGame::MultiWeighted(g) => {
                doc.form = Form::MultiWeighted;
                doc.games = Some(g.components().iter().map(component).collect());
            }
        }
        doc
    }
}
