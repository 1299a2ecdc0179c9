#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
HTTP 服务测试（pytest-flask 的 client 夹具）
"""

import src.server.flask_server as flask_server
from src.core.config import TestingConfig
from src.core.verifier import VerificationReport


def test_health(client):
    response = client.get('/api/health')
    assert response.status_code == 200
    data = response.get_json()
    assert data['status'] == 'healthy'
    assert 'max_group_order' in data['caps']
    assert data['spectrum']['spectral_cap'] == data['caps']['spectral_cap']
    assert set(data['spectrum']) == {'spectral_cap', 'validate', 'jobs'}


def test_group_info(client):
    response = client.get('/api/group/info', query_string={'spec': 'Q:8'})
    assert response.status_code == 200
    body = response.get_json()
    assert body['success'] is True
    assert body['data']['order'] == 8
    assert body['data']['center_order'] == 2
    assert body['data']['clique_sizes'] == [2, 2, 2]


def test_spectrum_both(client):
    response = client.get('/api/spectrum', query_string={'spec': 'QD:16', 'method': 'both'})
    assert response.status_code == 200
    assert response.get_json()['data']['agreement'] is True


def test_spectrum_default_method(client):
    body = client.get('/api/spectrum', query_string={'spec': 'A:4'}).get_json()
    assert body['data']['method'] == 'clique'
    assert body['data']['eigenvalues'][0] == {'value': 2, 'multiplicity': 1}


def test_missing_spec(client):
    response = client.get('/api/spectrum')
    assert response.status_code == 400
    assert response.get_json()['success'] is False


def test_bad_parameters(client):
    assert client.get('/api/spectrum', query_string={'spec': 'D:7'}).status_code == 400
    assert client.get('/api/spectrum', query_string={'spec': 'D:6', 'method': 'fast'}).status_code == 400
    assert client.get('/api/group/info', query_string={'spec': 'Z:7'}).status_code == 200


def test_syntax_error_offset(client):
    response = client.get('/api/group/info', query_string={'spec': 'D:6 y'})
    assert response.status_code == 400
    assert response.get_json()['offset'] == 4


def test_cap_exceeded(client, small_cap):
    response = client.get('/api/group/info', query_string={'spec': 'S:5'})
    assert response.status_code == 413
    assert response.get_json()['cap'] == small_cap


def test_graph_json(client):
    body = client.get('/api/graph', query_string={'spec': 'D:6'}).get_json()
    assert body['data']['vertices'] == [1, 2, 3, 4, 5]
    assert body['data']['edges'] == [[1, 3]]
    assert body['data']['edge_count'] == 1


def test_graph_dot(client):
    response = client.get('/api/graph', query_string={'spec': 'Q:8', 'format': 'dot'})
    assert response.status_code == 200
    assert response.mimetype == 'text/vnd.graphviz'
    assert response.get_data(as_text=True).count(' -- ') == 3


def test_graph_unknown_format(client):
    response = client.get('/api/graph', query_string={'spec': 'Q:8', 'format': 'png'})
    assert response.status_code == 400


def test_graph_of_abelian_group(client):
    response = client.get('/api/graph', query_string={'spec': 'Z:6'})
    assert response.status_code == 400


def test_verify(client):
    response = client.post('/api/verify', json={'filter': 'PQ:3:7'})
    assert response.status_code == 200
    data = response.get_json()['data']
    assert data['all_matched'] is True
    assert data['records'][0]['errata']['literal_fails'] is True


def test_verify_rejects_bad_jobs(client):
    assert client.post('/api/verify', json={'jobs': 0}).status_code == 400
    assert client.post('/api/verify', json=[1, 2]).status_code == 400


def test_verify_uses_configured_jobs(client, monkeypatch):
    """请求未给 jobs 时按服务配置的 VERIFY_JOBS 并发"""
    seen = {}

    def fake_run_suite(cases, parallelism=None):
        seen['parallelism'] = parallelism
        return VerificationReport([])

    monkeypatch.setattr(TestingConfig, 'VERIFY_JOBS', 3)
    monkeypatch.setattr(flask_server, 'run_suite', fake_run_suite)
    assert client.post('/api/verify', json={'filter': 'no-such-group'}).status_code == 200
    assert seen['parallelism'] == 3
    assert client.post('/api/verify', json={'jobs': 2}).status_code == 200
    assert seen['parallelism'] == 2
