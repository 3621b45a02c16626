use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use conway_core::service::{router, AppState};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let mut req = Request::builder().method(method).uri(uri);
    let body = match body {
        Some(v) => {
            req = req.header("content-type", "application/json");
            Body::from(v.to_string())
        }
        None => Body::empty(),
    };
    let resp = app.clone().oneshot(req.body(body).unwrap()).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = serde_json::from_slice(&bytes).unwrap_or(Value::Null);
    (status, value)
}

async fn open(app: &Router, design: Value) -> String {
    let (status, state) = call(app, "POST", "/session", Some(json!({ "design": design }))).await;
    assert_eq!(status, StatusCode::CREATED, "{state}");
    state["id"].as_str().unwrap().to_string()
}

#[tokio::test]
async fn lists_designs() {
    let app = router(AppState::new());
    let (status, v) = call(&app, "GET", "/designs", None).await;
    assert_eq!(status, StatusCode::OK);
    let names: Vec<&str> = v["designs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"pg23"));
    assert!(names.contains(&"symplectic:3"));
}

#[tokio::test]
async fn closed_walk_on_the_plane() {
    let app = router(AppState::new());
    let id = open(&app, json!("pg23")).await;
    let (_, start) = call(&app, "GET", &format!("/session/{id}"), None).await;
    assert_eq!(start["hole"], 0);
    assert_eq!(start["at_home"], true);
    assert_eq!(start["accumulated"]["cycles"], "()");
    assert_eq!(start["legal_moves"].as_array().unwrap().len(), 12);

    let mut last = Value::Null;
    for p in [11, 1, 0] {
        let (status, v) = call(&app, "POST", &format!("/session/{id}/move"), Some(json!({ "point": p }))).await;
        assert_eq!(status, StatusCode::OK);
        last = v;
    }
    assert_eq!(last["at_home"], true);
    assert_eq!(last["in_hole_stabilizer"], true);
    assert_eq!(last["is_identity"], false);
    assert_eq!(last["history"], json!([0, 11, 1, 0]));
    assert_eq!(last["accumulated"]["cycles"], "(1 11)(2 3)(5 8)(10 12)");
    assert_eq!(last["accumulated"]["degree"], 13);
    assert_eq!(last["accumulated"]["images"].as_array().unwrap().len(), 13);
}

#[tokio::test]
async fn walking_round_a_line_gives_the_identity() {
    let app = router(AppState::new());
    let id = open(&app, json!("pg23")).await;
    let mut last = Value::Null;
    for p in [10, 11, 0] {
        last = call(&app, "POST", &format!("/session/{id}/move"), Some(json!({ "point": p }))).await.1;
    }
    assert_eq!(last["accumulated"]["cycles"], "()");
    assert_eq!(last["is_identity"], true);
}

#[tokio::test]
async fn preview_does_not_commit() {
    let app = router(AppState::new());
    let id = open(&app, json!("pg23")).await;
    let (_, before) = call(&app, "GET", &format!("/session/{id}"), None).await;
    let (status, preview) = call(&app, "GET", &format!("/session/{id}/preview?point=5"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(preview["hole"], 5);
    let (_, after) = call(&app, "GET", &format!("/session/{id}"), None).await;
    assert_eq!(before, after);
    let (_, moved) = call(&app, "POST", &format!("/session/{id}/move"), Some(json!({ "point": 5 }))).await;
    assert_eq!(preview, moved);
}

#[tokio::test]
async fn undo_restores_the_start() {
    let app = router(AppState::new());
    let id = open(&app, json!("pg23")).await;
    let (_, start) = call(&app, "GET", &format!("/session/{id}"), None).await;
    call(&app, "POST", &format!("/session/{id}/move"), Some(json!({ "point": 4 }))).await;
    let (status, undone) = call(&app, "POST", &format!("/session/{id}/undo"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(undone, start);
}

#[tokio::test]
async fn illegal_moves_conflict() {
    let app = router(AppState::new());
    let chain = json!({ "n": 7, "blocks": [[0, 1, 2, 3], [3, 4, 5, 6]], "label": "chain" });
    let id = open(&app, chain).await;
    let (status, v) = call(&app, "POST", &format!("/session/{id}/move"), Some(json!({ "point": 5 }))).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(v["error"], "not-collinear");
    assert!(v["message"].as_str().unwrap().contains("collinear"));
    let (status, _) = call(&app, "GET", &format!("/session/{id}/preview?point=5"), None).await;
    assert_eq!(status, StatusCode::CONFLICT);
    let (_, state) = call(&app, "GET", &format!("/session/{id}"), None).await;
    assert_eq!(state["history"], json!([0]));
}

#[tokio::test]
async fn unknown_sessions_and_bad_designs() {
    let app = router(AppState::new());
    let (status, v) = call(&app, "GET", "/session/s999", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(v["error"], "unknown-session");
    let (status, _) = call(&app, "POST", "/session/s999/move", Some(json!({ "point": 1 }))).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    let (status, _) = call(&app, "POST", "/session", Some(json!({ "design": "pg99" }))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call(&app, "POST", "/session", Some(json!({ "design": "pg23", "home": 13 }))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn sessions_are_independent() {
    let app = router(AppState::new());
    let a = open(&app, json!("pg23")).await;
    let b = open(&app, json!("pg23")).await;
    assert_ne!(a, b);
    call(&app, "POST", &format!("/session/{a}/move"), Some(json!({ "point": 3 }))).await;
    let (_, sb) = call(&app, "GET", &format!("/session/{b}"), None).await;
    assert_eq!(sb["hole"], 0);
}
