# -*- coding: utf-8 -*-
"""
Command line front end: reads a flat scenario file, applies flag overrides, runs the orbit sweep
or the Doran horizon scan and writes the CSV dataset.

Exit codes: 0 success, 2 configuration or usage error, 3 physics-domain error.

Qudi is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

Qudi is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with Qudi. If not, see <http://www.gnu.org/licenses/>.

Copyright (c) the Qudi Developers. See the COPYRIGHT.txt file at the
top-level directory of this distribution and at <https://github.com/Ulm-IQO/qudi/>
"""
__all__ = ['EXIT_OK', 'EXIT_USAGE', 'EXIT_PHYSICS', 'parse_value', 'read_config_file',
           'build_parser', 'config_from_args', 'main']

import argparse
import logging
import sys
from dataclasses import fields

from qudi.core.logger import get_logger
from qudi.kerr_newman.spacetime import KerrNewmanError
from qudi.kerr_newman.sweep import OUTPUT_CHOICES, RadiusScale, ScenarioConfig, ScenarioError
from qudi.kerr_newman.sweep import run_doran_scan, run_sweep, write_csv

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PHYSICS = 3

_TRUE = ('1', 'true', 'yes', 'on')
_FALSE = ('0', 'false', 'no', 'off')


##############################################################################
#                            Config file
##############################################################################

def _split_list(text):
    return tuple(item.strip() for item in text.split(',') if item.strip())


def parse_value(key, text):
    """ Convert the text of a config entry to the type of the ScenarioConfig field key """
    try:
        if key == 'speeds':
            return tuple(float(item) for item in _split_list(text))
        if key == 'outputs':
            return tuple(item.lower() for item in _split_list(text))
        if key in ('r_count', 'threads'):
            return int(text)
        if key == 'include_horizons':
            if text.lower() in _TRUE:
                return True
            if text.lower() in _FALSE:
                return False
            raise ValueError(text)
        if key in ('r_scale', 'output'):
            return text
        return float(text)
    except ValueError:
        raise ScenarioError('Invalid value {0!r} for {1}.'.format(text, key)) from None


def read_config_file(path):
    """ Parse a flat 'key = value' file; '#' starts a comment, blank lines are ignored.

    @param (str) path: file path

    @return (dict): ScenarioConfig field values
    """
    known = {f.name for f in fields(ScenarioConfig)}
    values = dict()
    try:
        with open(path, 'r') as file:
            lines = file.readlines()
    except OSError as err:
        raise ScenarioError('Cannot read config file {0}: {1}'.format(path, err)) from None
    for number, line in enumerate(lines, start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, text = line.partition('=')
        key = key.strip()
        if not sep or not key:
            raise ScenarioError('{0}:{1}: expected "key = value".'.format(path, number))
        if key not in known:
            raise ScenarioError('{0}:{1}: unknown key {2!r}.'.format(path, number, key))
        if key in values:
            logger.warning('{0}:{1}: {2} given twice, the last value wins.'
                           ''.format(path, number, key))
        values[key] = parse_value(key, text.strip())
    return values


##############################################################################
#                            Arguments
##############################################################################

def build_parser():
    parser = argparse.ArgumentParser(
        prog='kerr-newman-epr',
        description='Wigner rotation and EPR/CHSH correlations of spin pairs on circular orbits '
                    'around a Kerr-Newman black hole.')
    parser.add_argument('--config', metavar='PATH', help='flat "key = value" scenario file')
    parser.add_argument('--mass', type=float, help='black hole mass M (geometric units)')
    parser.add_argument('--spin-ratio', type=float, help='a/M')
    parser.add_argument('--charge-ratio', type=float, help='Q/M')
    parser.add_argument('--speed', metavar='V[,V...]',
                        help='local orbit speed(s), comma separated')
    parser.add_argument('--phi', type=float, help='azimuth travelled by each particle, radians')
    parser.add_argument('--r-min', type=float, help='smallest radius (units of r+ for horizon)')
    parser.add_argument('--r-max', type=float, help='largest radius (units of r+ for horizon)')
    parser.add_argument('--r-count', type=int, help='number of radii')
    parser.add_argument('--r-scale', choices=[scale.value for scale in RadiusScale])
    parser.add_argument('--output', metavar='PATH', help="CSV destination, '-' for stdout")
    parser.add_argument('--outputs', metavar='LIST',
                        help='comma separated subset of {0}'.format(','.join(OUTPUT_CHOICES)))
    parser.add_argument('--threads', type=int, metavar='N', help='worker threads')
    parser.add_argument('--particle-mass', type=float, help='particle rest mass m')
    parser.add_argument('--no-horizons', action='store_true',
                        help='do not insert r- and r+ into the Doran scan grid')
    parser.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])
    return parser


def config_from_args(args):
    """ Defaults, then the config file, then command line flags """
    values = read_config_file(args.config) if args.config else dict()
    config = ScenarioConfig(**values)
    config = config.with_overrides(
        mass=args.mass,
        spin_ratio=args.spin_ratio,
        charge_ratio=args.charge_ratio,
        speeds=None if args.speed is None else parse_value('speeds', args.speed),
        phi=args.phi,
        r_min=args.r_min,
        r_max=args.r_max,
        r_count=args.r_count,
        r_scale=args.r_scale,
        output=args.output,
        outputs=None if args.outputs is None else parse_value('outputs', args.outputs),
        threads=args.threads,
        particle_mass=args.particle_mass,
        include_horizons=False if args.no_horizons else None)
    return config.validate()


def _write(dataset, destination):
    if destination == '-':
        write_csv(dataset, sys.stdout)
        sys.stdout.flush()
        return
    try:
        with open(destination, 'w', newline='') as file:
            write_csv(dataset, file)
    except OSError as err:
        raise ScenarioError('Cannot write {0}: {1}'.format(destination, err)) from None


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, args.log_level),
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        config = config_from_args(args)
        if 'doran' in config.outputs:
            dataset = run_doran_scan(config)
        else:
            dataset = run_sweep(config)
    except ScenarioError as err:
        logger.error(str(err))
        return EXIT_USAGE
    except KerrNewmanError as err:
        logger.error('{0}: {1}'.format(type(err).__name__, err))
        return EXIT_PHYSICS

    failed = len(dataset.failed_rows)
    if failed:
        logger.warning('{0} of {1} rows carry an error tag.'.format(failed, len(dataset.rows)))
    if dataset.all_failed:
        logger.error('Every row of the dataset is singular or invalid.')
        return EXIT_PHYSICS
    try:
        _write(dataset, config.output)
    except ScenarioError as err:
        logger.error(str(err))
        return EXIT_USAGE
    logger.info('Wrote {0} rows to {1}.'.format(len(dataset.rows), config.output))
    return EXIT_OK


if __name__ == '__main__':
    raise SystemExit(main())
