"""Unit test package for recfan."""
