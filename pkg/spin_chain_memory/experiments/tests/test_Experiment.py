import tempfile
import unittest
from pathlib import Path
from unittest.mock import MagicMock, patch

import numpy as np
import pandas as pd
import yaml

from spin_chain_memory.experiments import ConfigError, Experiment


class ConcreteExperiment(Experiment):
    """
    Need to implement the abstract method in the Experiment class.
    """

    name = "coeffs"

    def _compute_tables(self):
        return {"table.csv": pd.DataFrame({"t": [0.0, 0.5], "value": [1.0, 1.0 / 3.0]})}


class RandomExperiment(ConcreteExperiment):
    uses_random_states = True


class TestExperiment(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.sample_config = {
            "chain": {"uniform": {"J": 1.0, "J0": 1.0, "h": 0.5, "h0": 0.0, "N": 10}},
            "seed": 42,
            "threads": 1,
            "out": str(Path(self.tmp.name) / "run"),
        }

    def tearDown(self):
        self.tmp.cleanup()

    def test_initialization_saves_config_and_logs(self):
        experiment = ConcreteExperiment(config=self.sample_config)
        self.assertEqual(experiment.save_dir, Path(self.sample_config["out"]))
        with open(experiment.save_dir / "config.yaml") as f:
            self.assertEqual(yaml.safe_load(f), self.sample_config)
        log_text = (experiment.save_dir / "console.log").read_text()
        self.assertIn(f"COMPLETED: Created save directory [{experiment.save_dir}].", log_text)
        self.assertIn("SAVED: Config file [config.yaml]", log_text)

    def test_run_writes_tables(self):
        experiment = ConcreteExperiment(config=self.sample_config)
        with self.assertLogs("spin_chain_memory.coeffs", level="INFO") as logs:
            paths = experiment.run_experiment()
        table = pd.read_csv(paths["table.csv"])
        np.testing.assert_allclose(table["value"], [1.0, 1.0 / 3.0], rtol=0, atol=0)
        self.assertTrue(any("COMPLETED: Experiment [coeffs]." in line for line in logs.output))

    @patch("spin_chain_memory.experiments.Experiment.setup_logger")
    @patch("spin_chain_memory.experiments.Experiment.setup_default_logger")
    def test_load_only_mode(self, mock_setup_default_logger, mock_setup_logger):
        mock_setup_default_logger.return_value = MagicMock()
        experiment = ConcreteExperiment(config=self.sample_config, load_only=True)
        self.assertFalse(hasattr(experiment, "experiment_name"))
        self.assertFalse(hasattr(experiment, "save_dir"))
        mock_setup_default_logger.assert_called_once()
        mock_setup_logger.assert_not_called()
        with self.assertRaises(RuntimeError):
            experiment.run_experiment()

    @patch("spin_chain_memory.experiments.Experiment.datetime")
    def test_experiment_name_creation(self, mock_datetime):
        mock_datetime.now.return_value.strftime.return_value = "2021-01-01"
        experiment = ConcreteExperiment(config=self.sample_config, load_only=True)
        self.assertEqual(experiment._create_experiment_name(), "2021-01-01_coeffs")

    @patch("spin_chain_memory.experiments.Experiment.socket.gethostname")
    @patch("pathlib.Path.exists")
    @patch("pathlib.Path.mkdir")
    def test_create_save_dir_directory_exists(self, mock_mkdir, mock_exists, mock_gethostname):
        mock_gethostname.return_value = "test-host"
        mock_exists.side_effect = [True, False]
        del self.sample_config["out"]

        experiment = ConcreteExperiment(config=self.sample_config, load_only=True)
        experiment.experiment_name = "2021-01-01_coeffs"
        save_dir = experiment._create_save_dir()

        self.assertEqual(save_dir, Path("results/2021-01-01_coeffs_test_2"))
        mock_mkdir.assert_called_once_with(parents=True, exist_ok=True)


class TestConfigChecks(unittest.TestCase):
    def setUp(self):
        self.config = {
            "chain": {"uniform": {"J": 1.0, "J0": 1.0, "h": 0.5, "h0": 0.0, "N": 10}},
            "seed": None,
            "threads": 1,
        }

    def test_missing_chain(self):
        del self.config["chain"]
        with self.assertRaises(ConfigError):
            ConcreteExperiment(config=self.config, load_only=True)

    def test_random_experiments_need_a_seed(self):
        with self.assertRaises(ConfigError):
            RandomExperiment(config=self.config, load_only=True)
        self.config["seed"] = 3
        RandomExperiment(config=self.config, load_only=True)

    def test_experiment_name_must_match(self):
        self.config["experiment"] = "flux"
        with self.assertRaises(ConfigError):
            ConcreteExperiment(config=self.config, load_only=True)

    def test_threads_must_be_an_integer(self):
        self.config["threads"] = 0
        with self.assertRaises(ConfigError):
            ConcreteExperiment(config=self.config, load_only=True)

    def test_values(self):
        self.config["h_values"] = {"start": 0.0, "stop": 1.0, "num": 5}
        self.config["j0_values"] = [0.8, 1.2]
        self.config["bad"] = {"start": 0.0}
        experiment = ConcreteExperiment(config=self.config, load_only=True)
        np.testing.assert_allclose(experiment.values("h_values"), [0.0, 0.25, 0.5, 0.75, 1.0])
        np.testing.assert_allclose(experiment.values("j0_values"), [0.8, 1.2])
        with self.assertRaises(ConfigError):
            experiment.values("bad")
        with self.assertRaises(ConfigError):
            experiment.values("missing")

    def test_chain_spec_with_field_override(self):
        experiment = ConcreteExperiment(config=self.config, load_only=True)
        spec = experiment.chain_spec(h=0.9)
        self.assertEqual(spec.fields[0], 0.0)
        self.assertEqual(spec.fields[1:], (0.9,) * 10)

    def test_invalid_chains(self):
        self.config["chain"] = {"uniform": {"J": 1.0, "N": 0}}
        experiment = ConcreteExperiment(config=self.config, load_only=True)
        with self.assertRaises(ConfigError):
            experiment.chain_spec()
        self.config["chain"] = {"n_sites": 1, "jx": [1.0], "fields": [0.0, 0.0]}
        experiment = ConcreteExperiment(config=self.config, load_only=True)
        self.assertEqual(experiment.chain_spec().n_sites, 1)
        with self.assertRaises(ConfigError):
            experiment.chain_spec(h=0.5)


if __name__ == "__main__":
    unittest.main()
