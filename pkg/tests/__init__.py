"""Tests for sumprod."""
