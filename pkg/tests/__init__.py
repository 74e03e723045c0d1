"""Test suite for Hilbert forms"""
