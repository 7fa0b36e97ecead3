from pathlib import Path

import pytest

from dmincut import parse_edge_distribution, parse_network

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURES = REPO_ROOT / "fixtures"


@pytest.fixture(scope="session")
def fig1_text():
    return (FIXTURES / "fig1.net").read_text()


@pytest.fixture(scope="session")
def fig1(fig1_text):
    return parse_network(fig1_text)


@pytest.fixture(scope="session")
def fig1_prob():
    text = (FIXTURES / "fig1_prob.net").read_text()
    net = parse_network(text)
    return net, parse_edge_distribution(text, net)
