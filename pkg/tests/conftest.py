# -*- coding: utf-8 -*-
from __future__ import division
from __future__ import print_function
from __future__ import absolute_import
from __future__ import unicode_literals

import io
import os
import json
import yaml
import pytest
import fnmatch
from jacobiseq import build_transducer


SCENARIOS = os.path.join(os.path.dirname(__file__), 'scenarios')
SCHEMAS = os.path.join(os.path.dirname(__file__), '..', 'jacobiseq', 'schemas')


@pytest.fixture(scope='session')
def table():
    return build_transducer()


@pytest.fixture(scope='session')
def log():
    def fixture(findings):
        # Pack findings to tuples list log: (position, pattern, code)
        result = []
        for finding in findings:
            finding = dict(finding)
            result.append((finding.get('position'), finding.get('pattern'), finding.get('code')))
        return result
    return fixture


@pytest.fixture(scope='session')
def schema():
    def fixture(name):
        with io.open(os.path.join(SCHEMAS, '%s.json' % name), encoding='utf-8') as file:
            return json.load(file)
    return fixture


def pytest_generate_tests(metafunc):
    if 'scenario' in metafunc.fixturenames:
        scenarios = {}
        for root, dirnames, filenames in os.walk(SCENARIOS):
            for filename in fnmatch.filter(filenames, '*.yml'):
                filepath = os.path.join(root, filename)
                scenarios.update(yaml.safe_load(io.open(filepath, encoding='utf-8')) or {})
        params = []
        for name in sorted(scenarios):
            params.append([name, scenarios[name]])
        metafunc.parametrize('name, scenario', params)
