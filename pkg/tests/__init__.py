"""Test suite for cantor-retract."""
