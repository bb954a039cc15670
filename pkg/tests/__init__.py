"""InfluNet tests"""
